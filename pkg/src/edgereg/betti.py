"""Exact multigraded Betti numbers and Castelnuovo-Mumford regularity.

For a monomial ideal I and a multidegree b in the lcm lattice of its
minimal generators, the rank of the (i-1)-st reduced homology of the
squarefree slice complex at b is the multigraded Betti number
beta_{i,b}(I); multidegrees outside the lattice contribute nothing.  The
graded table aggregates by total degree and the regularity is
max{j - i : beta_{i,j} != 0}.

The slice at b is the complex of squarefree vectors tau inside supp(b)
with x^b / x^tau still in I.  It is covered by the full simplices
``A_g = {j : deg_j(g) < deg_j(b)}`` over the generators g dividing b, so
its homology is computed through the covered-complex pipeline in
:mod:`edgereg.homology` without materializing faces of large slices.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotSquarefreeError, ResourceCapError, ZeroIdealError
from .homology import (
    FIELD_Q,
    FIELDS,
    SimplicialComplexSlice,
    covered_homology,
    enumerate_union_faces,
    maximal_masks,
)
from .ideals import MonomialIdeal
from .ring import Monomial, VariableSet

DEFAULT_LATTICE_CAP = 200_000


# -- lcm lattice ----------------------------------------------------------


@dataclass(frozen=True)
class LcmLattice:
    """All least common multiples of nonempty generator subsets."""

    ideal: MonomialIdeal
    multidegrees: tuple[Monomial, ...]

    @property
    def size(self) -> int:
        return len(self.multidegrees)

    def __contains__(self, m: Monomial) -> bool:
        return m in set(self.multidegrees)


def _dense_generators(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    return [g.dense() for g in ideal.generators]


def _lattice_tuples(gens: list[tuple[int, ...]], cap: int) -> list[tuple[int, ...]]:
    lattice: set[tuple[int, ...]] = set()
    for g in gens:
        new = {tuple(map(max, zip(g, b))) for b in lattice}
        new.add(g)
        lattice |= new
        if len(lattice) > cap:
            raise ResourceCapError(
                f"lcm lattice exceeds the size cap {cap}; "
                f"raise lattice_cap to proceed"
            )
    return sorted(lattice, key=lambda b: (sum(b), b))


def lcm_lattice(ideal: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> LcmLattice:
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no lcm lattice")
    variables = ideal.variables
    tuples = _lattice_tuples(_dense_generators(ideal), cap)
    return LcmLattice(
        ideal=ideal,
        multidegrees=tuple(Monomial.from_dense(variables, b) for b in tuples),
    )


# -- upper Koszul slices --------------------------------------------------


def _is_lattice_multidegree(gens: list[tuple[int, ...]], b: tuple[int, ...]) -> bool:
    # b is a join of generators iff it is the join of the generators
    # dividing it.
    join = None
    for g in gens:
        if all(x <= y for x, y in zip(g, b)):
            join = g if join is None else tuple(map(max, zip(join, g)))
    return join == b


def upper_koszul_slice(ideal: MonomialIdeal, b: Monomial) -> SimplicialComplexSlice:
    """The squarefree slice complex of I at the multidegree b.

    Vertices are the variables in supp(b); a subset tau is a face exactly
    when x^b / x^tau lies in I.  Faces are materialized, so this is meant
    for desk-scale multidegrees; the Betti engine itself uses the covered
    form.
    """
    if ideal.is_zero:
        raise ZeroIdealError("slices of the zero ideal are undefined")
    if b.variables != ideal.variables:
        raise ValueError("multidegree over a different variable set")
    gens = _dense_generators(ideal)
    bt = b.dense()
    if not _is_lattice_multidegree(gens, bt):
        raise ValueError(f"{b} is not in the lcm lattice of {ideal}")
    support = sorted(b.support)
    local = {v: i for i, v in enumerate(support)}
    covers = []
    for g in gens:
        if all(x <= y for x, y in zip(g, bt)):
            mask = 0
            for v in support:
                if g[v] < bt[v]:
                    mask |= 1 << local[v]
            covers.append(mask)
    faces = enumerate_union_faces(maximal_masks(covers)) if covers else set()
    return SimplicialComplexSlice(labels=tuple(support), faces=faces)


def homology_ranks(slice_: SimplicialComplexSlice, field: str = FIELD_Q) -> dict[int, int]:
    """Reduced homology ranks of a slice, by dimension."""
    return slice_.homology_ranks(field)


# -- Betti tables ----------------------------------------------------------


class BettiTable:
    """Graded and multigraded Betti numbers over a fixed coefficient field."""

    __slots__ = ("variables", "field", "entries", "multigraded")

    def __init__(
        self,
        variables: VariableSet,
        field: str,
        multigraded: dict[tuple[int, Monomial], int],
    ):
        entries: dict[tuple[int, int], int] = {}
        for (i, b), rank in multigraded.items():
            key = (i, b.degree)
            entries[key] = entries.get(key, 0) + rank
        self.variables = variables
        self.field = field
        self.entries = entries
        self.multigraded = dict(multigraded)

    def rank(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def nonzero(self) -> list[tuple[int, int, int]]:
        return [(i, j, r) for (i, j), r in sorted(self.entries.items()) if r]

    def max_homological_index(self) -> int:
        return max(i for (i, _j), r in self.entries.items() if r)

    def regularity(self) -> int:
        return max(j - i for (i, j), r in self.entries.items() if r)

    def regularity_witness(self) -> tuple[int, int]:
        """The lexicographically least (i, j) achieving the regularity."""
        reg = self.regularity()
        return min((i, j) for (i, j), r in self.entries.items() if r and j - i == reg)

    def generator_degrees(self) -> dict[int, int]:
        return {j: r for (i, j), r in sorted(self.entries.items()) if i == 0 and r}

    def graded_equal(self, other: "BettiTable") -> bool:
        mine = {k: r for k, r in self.entries.items() if r}
        theirs = {k: r for k, r in other.entries.items() if r}
        return mine == theirs

    def to_json_dict(self) -> dict:
        return {
            "field": self.field,
            "entries": [
                {"i": i, "j": j, "rank": r} for (i, j, r) in self.nonzero()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def text_grid(self) -> str:
        """Aligned grid, rows by degree j, columns by homological index i."""
        nz = self.nonzero()
        if not nz:
            return "(empty table)"
        imax = max(i for i, _, _ in nz)
        jmin = min(j for _, j, _ in nz)
        jmax = max(j for _, j, _ in nz)
        width = max(len(str(r)) for _, _, r in nz)
        width = max(width, len(str(imax)), len(str(jmax)), 2)
        head = " j\\i |" + "".join(f" {i:>{width}}" for i in range(imax + 1))
        lines = [head, "-" * len(head)]
        for j in range(jmin, jmax + 1):
            row = f"{j:>4} |"
            for i in range(imax + 1):
                r = self.rank(i, j)
                row += f" {r if r else '.':>{width}}"
            lines.append(row)
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"BettiTable(field={self.field}, nonzero={len(self.nonzero())})"


def _slice_covers(
    gens: list[tuple[int, ...]], b: tuple[int, ...]
) -> tuple[int, list[int]]:
    """Divisor-side cover masks of the slice at b.

    Vertices are the generators dividing b; for each variable j in
    supp(b) the generators that do not attain deg_j(b) span a full
    simplex, and these simplices cover the (nerve-dual) slice complex.
    """
    divisors = [g for g in gens if all(x <= y for x, y in zip(g, b))]
    covers = []
    for j, bj in enumerate(b):
        if bj == 0:
            continue
        mask = 0
        for idx, g in enumerate(divisors):
            if g[j] < bj:
                mask |= 1 << idx
        covers.append(mask)
    return len(divisors), covers


def _slice_betti(
    gens: list[tuple[int, ...]], b: tuple[int, ...], field: str
) -> dict[int, int]:
    """{homological index i: beta_{i,b}} for one lattice multidegree."""
    nverts, covers = _slice_covers(gens, b)
    hom = covered_homology(covers, nverts, field)
    return {d + 1: r for d, r in hom.items() if r}


def _slice_batch(args) -> list[tuple[tuple[int, ...], dict[int, int]]]:
    gens, batch, field = args
    return [(b, _slice_betti(gens, b, field)) for b in batch]


@lru_cache(maxsize=4096)
def _betti_multidegrees(
    names: tuple[str, ...],
    gens: tuple[tuple[int, ...], ...],
    field: str,
    lattice_cap: int,
    workers: int,
) -> tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...]], ...]:
    lattice = _lattice_tuples(list(gens), lattice_cap)
    gen_list = list(gens)
    results: list[tuple[tuple[int, ...], dict[int, int]]] = []
    if workers > 1 and len(lattice) > 64:
        chunk = max(16, len(lattice) // (workers * 8))
        batches = [lattice[k : k + chunk] for k in range(0, len(lattice), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_slice_batch, [(gen_list, batch, field) for batch in batches]):
                results.extend(part)
    else:
        for b in lattice:
            results.append((b, _slice_betti(gen_list, b, field)))
    out = []
    for b, ranks in results:
        if ranks:
            out.append((b, tuple(sorted(ranks.items()))))
    out.sort(key=lambda item: (sum(item[0]), item[0]))
    return tuple(out)


def betti_table(
    ideal: MonomialIdeal,
    field: str = FIELD_Q,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    workers: int = 1,
) -> BettiTable:
    """The full graded/multigraded Betti table of a nonzero monomial ideal."""
    if ideal.is_zero:
        raise ZeroIdealError("Betti table of the zero ideal is undefined")
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")
    gens = tuple(_dense_generators(ideal))
    per_b = _betti_multidegrees(
        ideal.variables.names, gens, field, lattice_cap, workers
    )
    multigraded: dict[tuple[int, Monomial], int] = {}
    for b, ranks in per_b:
        bm = Monomial.from_dense(ideal.variables, b)
        for i, r in ranks:
            multigraded[(i, bm)] = r
    return BettiTable(ideal.variables, field, multigraded)


def regularity(
    ideal: MonomialIdeal,
    field: str = FIELD_Q,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    workers: int = 1,
) -> int:
    """max{j - i : beta_{i,j} != 0}."""
    return betti_table(ideal, field, lattice_cap, workers).regularity()


def quotient_regularity(ideal: MonomialIdeal, field: str = FIELD_Q) -> int:
    """Regularity of the quotient ring S/I, one less than that of I."""
    return regularity(ideal, field) - 1


def private_variable_regularity(ideal: MonomialIdeal) -> int | None:
    """Fast path for squarefree ideals whose generators all own a variable.

    If every minimal generator contains a variable dividing no other
    generator, the regularity is |supp(I)| - |G(I)| + 1.  Returns None
    when the fast path does not apply.
    """
    if ideal.is_zero:
        raise ZeroIdealError("regularity of the zero ideal is undefined")
    if not ideal.is_squarefree:
        raise NotSquarefreeError("private-variable regularity needs a squarefree ideal")
    gens = ideal.generators
    for g in gens:
        private = False
        for v in g.support:
            if all(other is g or v not in other.support for other in gens):
                private = True
                break
        if not private:
            return None
    return len(ideal.support) - len(gens) + 1


def compare_tables(a: BettiTable, b: BettiTable) -> list[tuple[int, int, int, int]]:
    """Entrywise differences [(i, j, rank_a, rank_b)]; empty means equal."""
    keys = set(a.entries) | set(b.entries)
    out = []
    for i, j in sorted(keys):
        ra, rb = a.rank(i, j), b.rank(i, j)
        if ra != rb:
            out.append((i, j, ra, rb))
    return out


def has_linear_resolution(table: BettiTable) -> bool:
    """All generators in one degree d and beta_{i,j} = 0 unless j = d + i."""
    degs = table.generator_degrees()
    if len(degs) != 1:
        return False
    d = next(iter(degs))
    return all(j == d + i for (i, j), r in table.entries.items() if r)
