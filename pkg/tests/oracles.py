"""Independent reference implementations used only by the tests.

Everything here is deliberately naive: dense fraction arithmetic, full
subset enumeration, membership checked from definitions.  The production
engine is validated against these, so nothing in this module may import
the optimized paths it checks (the covered-complex pipeline, Bareiss
elimination, bit-packed GF(2)).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from edgereg.ideals import MonomialIdeal
from edgereg.ring import Monomial


def fraction_rank(rows: list[list[int]]) -> int:
    """Dense Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] / pv
                for c in range(col, ncols):
                    m[r][c] -= f * m[rank][c]
        rank += 1
        if rank == len(m):
            break
    return rank


def mod2_rank(rows: list[list[int]]) -> int:
    """Dense elimination over GF(2) on 0/1 lists (no bit packing)."""
    m = [[x & 1 for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                m[r] = [(a + b) & 1 for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def reduced_homology_of_face_sets(faces: set[frozenset], field: str) -> dict[int, int]:
    """Reduced homology from an explicit face list, including the empty face."""
    if not faces:
        return {}
    if faces == {frozenset()}:
        return {-1: 1}
    by_dim: dict[int, list[frozenset]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort(key=sorted)
    ranks: dict[int, int] = {}
    for d in sorted(by_dim):
        if d - 1 not in by_dim:
            continue
        index = {f: i for i, f in enumerate(by_dim[d - 1])}
        rows = []
        for f in by_dim[d]:
            row = [0] * len(by_dim[d - 1])
            for k, v in enumerate(sorted(f)):
                row[index[f - {v}]] = (-1) ** k
            rows.append(row)
        ranks[d] = fraction_rank(rows) if field == "Q" else mod2_rank(rows)
    out = {}
    for d, fs in by_dim.items():
        h = len(fs) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def subset_lcm_lattice(ideal: MonomialIdeal) -> set[Monomial]:
    """All lcms of nonempty generator subsets, by direct enumeration."""
    gens = ideal.generators
    out: set[Monomial] = set()
    for k in range(1, len(gens) + 1):
        for subset in combinations(gens, k):
            m = subset[0]
            for g in subset[1:]:
                m = m.lcm(g)
            out.add(m)
    return out


def koszul_slice_faces(ideal: MonomialIdeal, b: Monomial) -> set[frozenset]:
    """Faces of the slice at b straight from the membership definition."""
    support = sorted(b.support)
    faces: set[frozenset] = set()
    for k in range(len(support) + 1):
        for tau in combinations(support, k):
            quotient = b / Monomial(b.variables, {v: 1 for v in tau})
            if ideal.contains_monomial(quotient):
                faces.add(frozenset(tau))
    return faces


def betti_table_reference(ideal: MonomialIdeal, field: str = "Q") -> dict[tuple[int, int], int]:
    """Graded Betti numbers by full enumeration over the subset lattice."""
    table: dict[tuple[int, int], int] = {}
    for b in subset_lcm_lattice(ideal):
        faces = koszul_slice_faces(ideal, b)
        hom = reduced_homology_of_face_sets(faces, field)
        for d, r in hom.items():
            key = (d + 1, b.degree)
            table[key] = table.get(key, 0) + r
    return {k: v for k, v in table.items() if v}


def regularity_reference(ideal: MonomialIdeal, field: str = "Q") -> int:
    table = betti_table_reference(ideal, field)
    return max(j - i for (i, j) in table)
