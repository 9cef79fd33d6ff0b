"""Reduced simplicial homology over Q or GF(2), exactly.

Two representations are used:

* an explicit face list (``SimplicialComplexSlice``), for complexes that
  are small enough to enumerate directly; and
* a covered form -- a union of full simplices given by their vertex
  bitmasks -- which is how the Betti engine sees a slice.

For the covered form we never enumerate faces until the complex has been
shrunk.  A union of simplices is homotopy equivalent to the nerve of the
cover, and the nerve of ``{M_1, ..., M_k}`` on vertex set V is again a
union of simplices, covered by ``{W_v : v in V}`` with
``W_v = {i : v in M_i}``.  Transposing back and forth strictly reduces
the vertex count until it stabilizes (each side is bounded by the other
side's cover count), and a complex whose maximal cover sets share a
vertex is a cone, hence has no reduced homology.  All reductions preserve
homotopy type, so reduced homology is computed on the small survivor.

Conventions: the void complex (no faces at all) has no homology in any
degree; the complex containing only the empty face has reduced homology
of rank 1 in degree -1.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ResourceCapError
from .linalg import rank_gf2, rank_int

FIELD_Q = "Q"
FIELD_GF2 = "GF2"
FIELDS = (FIELD_Q, FIELD_GF2)

# Hard ceiling on faces materialized for a single complex.
MAX_FACES = 1 << 20


def _check_field(field: str) -> None:
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def maximal_masks(masks) -> list[int]:
    """Drop masks contained in another mask; result sorted descending."""
    distinct = sorted(set(masks), key=lambda m: (-_popcount(m), -m))
    out: list[int] = []
    for m in distinct:
        if not any(m | o == o for o in out):
            out.append(m)
    return out


def enumerate_union_faces(covers: list[int], cap: int = MAX_FACES) -> set[int]:
    """All subsets of the given masks (the faces of the covered complex)."""
    faces: set[int] = {0}
    for mask in covers:
        sub = mask
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & mask
            if len(faces) > cap:
                raise ResourceCapError(
                    f"slice complex exceeds the face cap MAX_FACES={cap}"
                )
    return faces


def boundary_rank_table(faces: set[int], field: str) -> tuple[dict[int, int], dict[int, int]]:
    """Per-dimension face counts and boundary ranks of an explicit complex.

    Faces are bitmasks; the empty face (mask 0) is the single cell in
    dimension -1 and the rank of the augmentation is included.  Columns
    are ordered by mask value so runs are reproducible.
    """
    _check_field(field)
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(_popcount(f) - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort()
    counts = {d: len(fs) for d, fs in by_dim.items()}
    ranks: dict[int, int] = {}
    for d in sorted(by_dim):
        if d - 1 not in by_dim:
            continue
        target_index = {f: i for i, f in enumerate(by_dim[d - 1])}
        ncols = counts[d - 1]
        if field == FIELD_GF2:
            rows = []
            for f in by_dim[d]:
                row = 0
                v = f
                while v:
                    bit = v & -v
                    row |= 1 << target_index[f ^ bit]
                    v ^= bit
                rows.append(row)
            ranks[d] = rank_gf2(rows, ncols)
        else:
            rows = []
            for f in by_dim[d]:
                row = [0] * ncols
                sign = 1
                v = f
                while v:
                    bit = v & -v
                    row[target_index[f ^ bit]] = sign
                    sign = -sign
                    v ^= bit
                rows.append(row)
            ranks[d] = rank_int(rows, ncols)
    return counts, ranks


def homology_from_faces(faces: set[int], field: str) -> dict[int, int]:
    """Reduced homology ranks {dimension: rank}, zero ranks omitted."""
    if not faces:
        return {}
    if faces == {0}:
        return {-1: 1}
    counts, ranks = boundary_rank_table(faces, field)
    for d, r in ranks.items():
        if not 0 <= r <= min(counts[d], counts.get(d - 1, 0)):
            raise AssertionError(
                f"boundary rank {r} out of bounds for chain sizes in dimension {d}"
            )
    out: dict[int, int] = {}
    for d, cd in counts.items():
        h = cd - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h < 0:
            raise AssertionError("negative homology rank: boundary ranks inconsistent")
        if h:
            out[d] = h
    return out


def _transpose_cover(covers: list[int], nverts: int) -> list[int]:
    out = []
    for v in range(nverts):
        bit = 1 << v
        m = 0
        for i, mask in enumerate(covers):
            if mask & bit:
                m |= 1 << i
        out.append(m)
    return out


def _canonical_cover(covers: list[int], nverts: int) -> tuple[int, ...]:
    """Relabel vertices by their cover-membership signature.

    Only needs to be isomorphism-safe (it permutes vertices), not a true
    canonical form; it exists so structurally identical slices hit the
    homology cache.
    """
    sigs = _transpose_cover(covers, nverts)
    order = sorted(range(nverts), key=lambda v: (sigs[v], v))
    relabel = {old: new for new, old in enumerate(order)}
    remapped = []
    for mask in covers:
        m = 0
        v = mask
        while v:
            bit = v & -v
            m |= 1 << relabel[bit.bit_length() - 1]
            v ^= bit
        remapped.append(m)
    return tuple(sorted(remapped))


@lru_cache(maxsize=65536)
def _covered_homology_cached(covers: tuple[int, ...], field: str) -> tuple[tuple[int, int], ...]:
    faces = enumerate_union_faces(list(covers))
    return tuple(sorted(homology_from_faces(faces, field).items()))


def covered_homology(covers: list[int], nverts: int, field: str) -> dict[int, int]:
    """Reduced homology of a union of full simplices.

    ``covers`` are vertex bitmasks over ``nverts`` vertices; every face of
    the complex is a subset of one of them.  The empty face is always
    present (as in :func:`enumerate_union_faces`), so an empty cover
    family is the empty-face-only complex, not the void complex.
    """
    _check_field(field)
    if not covers:
        return {-1: 1}
    live = maximal_masks(covers)
    if live == [0]:
        return {-1: 1}
    live = [m for m in live if m]
    while True:
        inter = live[0]
        for m in live[1:]:
            inter &= m
        if inter:
            return {}  # a common vertex cones the complex
        k = len(live)
        if k >= nverts:
            break
        # nerve transpose: strictly fewer vertices
        live = maximal_masks(m for m in _transpose_cover(live, nverts) if m)
        nverts = k
    key = _canonical_cover(live, nverts)
    return dict(_covered_homology_cached(key, field))


class SimplicialComplexSlice:
    """An explicit simplicial complex on a labeled vertex set.

    Faces are stored as bitmasks over the local vertex order; ``labels``
    maps local bit positions to caller-level identifiers (for the Betti
    engine these are variable indices).
    """

    __slots__ = ("labels", "faces")

    def __init__(self, labels: tuple, faces: set[int]):
        closed = set(faces)
        for f in faces:
            # closure under subsets, so callers may pass facets only
            sub = f
            while True:
                closed.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
                if len(closed) > MAX_FACES:
                    raise ResourceCapError(
                        f"complex exceeds the face cap MAX_FACES={MAX_FACES}"
                    )
        self.labels = tuple(labels)
        self.faces = closed

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int:
        if not self.faces:
            return -2
        return max(_popcount(f) for f in self.faces) - 1

    def face_sets(self) -> list[frozenset]:
        out = []
        for f in sorted(self.faces):
            out.append(
                frozenset(self.labels[i] for i in range(f.bit_length()) if (f >> i) & 1)
            )
        return out

    def face_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for f in self.faces:
            d = _popcount(f) - 1
            counts[d] = counts.get(d, 0) + 1
        return counts

    def homology_ranks(self, field: str = FIELD_Q) -> dict[int, int]:
        """Reduced homology ranks by dimension, including explicit zeros."""
        nonzero = homology_from_faces(self.faces, field)
        if self.is_void:
            return {}
        out = {d: nonzero.get(d, 0) for d in range(-1, max(self.dimension, -1) + 1)}
        return out
