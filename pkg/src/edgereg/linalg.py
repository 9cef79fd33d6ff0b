"""Exact matrix ranks: fraction-free elimination over the integers and
bit-packed elimination over GF(2).

Both routines take a matrix as a list of rows.  Integer rows are lists of
ints; GF(2) rows are ints used as bitmasks (bit c = column c).
"""

from __future__ import annotations

from .errors import ResourceCapError

# Boundary matrices after slice reduction are small; anything bigger
# signals a runaway input and should fail fast rather than thrash.
MAX_MATRIX_DIM = 4096


def _check_dims(nrows: int, ncols: int) -> None:
    if nrows > MAX_MATRIX_DIM or ncols > MAX_MATRIX_DIM:
        raise ResourceCapError(
            f"matrix of shape {nrows}x{ncols} exceeds the dimension cap "
            f"MAX_MATRIX_DIM={MAX_MATRIX_DIM}"
        )


def rank_int(rows: list[list[int]], ncols: int | None = None) -> int:
    """Rank over the rationals of an integer matrix, computed exactly.

    Single-step fraction-free (Bareiss) elimination: every intermediate
    entry is a minor of the input, so arithmetic stays in the integers and
    the divisions below are exact.
    """
    if not rows:
        return 0
    m = [list(r) for r in rows]
    nrows = len(m)
    if ncols is None:
        ncols = len(m[0])
    _check_dims(nrows, ncols)
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv_row = m[rank]
        p = piv_row[col]
        for r in range(rank + 1, nrows):
            row = m[r]
            factor = row[col]
            if factor:
                for c in range(col + 1, ncols):
                    q, rem = divmod(p * row[c] - factor * piv_row[c], prev)
                    if rem:
                        raise AssertionError("fraction-free elimination produced a remainder")
                    row[c] = q
                row[col] = 0
            elif p != prev:
                # the uniform update degenerates to scaling by p/prev,
                # which the minor identity keeps integral
                for c in range(col + 1, ncols):
                    q, rem = divmod(p * row[c], prev)
                    if rem:
                        raise AssertionError("fraction-free elimination produced a remainder")
                    row[c] = q
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_gf2(rows: list[int], ncols: int) -> int:
    """Rank over GF(2); rows are bitmask ints."""
    _check_dims(len(rows), ncols)
    work = [r for r in rows if r]
    rank = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = None
        for i in range(rank, len(work)):
            if work[i] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        piv = work[rank]
        for i in range(len(work)):
            if i != rank and (work[i] & bit):
                work[i] ^= piv
        rank += 1
        if rank == len(work):
            break
    return rank
