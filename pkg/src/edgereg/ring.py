"""Variable sets and exact monomial arithmetic.

Monomials are sparse nonnegative exponent vectors over a fixed, ordered
variable set.  The canonical text form joins factors with ``*`` and powers
with ``^`` in variable-set order, e.g. ``x1^2*x3``; the unit monomial is
``1``.  That form round-trips through :func:`parse_monomial`.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import DegreeCapError, ParseError, VariableSetMismatchError

# Total degree allowed in any single monomial.  Exponents are plain Python
# integers, so this is a sanity cap on runaway constructions, not an
# arithmetic limit.
DEGREE_CAP = 10**6

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class VariableSet:
    """An ordered, immutable collection of distinct variable names."""

    __slots__ = ("_names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        seen = set()
        for name in names:
            if not _NAME_RE.match(name):
                raise ParseError(f"invalid variable name {name!r}")
            if name in seen:
                raise ParseError(f"duplicate variable name {name!r}")
            seen.add(name)
        self._names = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}") from None

    def __len__(self) -> int:
        return len(self._names)

    def __iter__(self):
        return iter(self._names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableSet) and self._names == other._names

    def __hash__(self) -> int:
        return hash(self._names)

    def __repr__(self) -> str:
        return f"VariableSet({list(self._names)!r})"


def _check_same_ring(a: "Monomial", b: "Monomial") -> None:
    if a.variables != b.variables:
        raise VariableSetMismatchError(
            f"operands over different variable sets: "
            f"{a.variables.names} vs {b.variables.names}"
        )


class Monomial:
    """A monomial stored as a sparse map variable index -> positive exponent.

    Immutable; the empty map is the unit monomial 1.
    """

    __slots__ = ("_vars", "_exps", "_degree", "_hash")

    def __init__(self, variables: VariableSet, exponents: Mapping[int, int]):
        exps = {}
        for idx, e in exponents.items():
            if not isinstance(e, int):
                raise TypeError(f"exponent for index {idx} is not an integer: {e!r}")
            if e < 0:
                raise ValueError(f"negative exponent {e} at index {idx}")
            if e == 0:
                continue
            if not 0 <= idx < len(variables):
                raise IndexError(f"variable index {idx} out of range")
            exps[idx] = e
        degree = sum(exps.values())
        if degree > DEGREE_CAP:
            raise DegreeCapError(
                f"monomial degree {degree} exceeds cap {DEGREE_CAP}"
            )
        self._vars = variables
        self._exps = exps
        self._degree = degree
        self._hash = hash((variables, tuple(sorted(exps.items()))))

    @classmethod
    def unit(cls, variables: VariableSet) -> "Monomial":
        return cls(variables, {})

    @classmethod
    def variable(cls, variables: VariableSet, name: str, power: int = 1) -> "Monomial":
        return cls(variables, {variables.index(name): power})

    @classmethod
    def from_dense(cls, variables: VariableSet, exps: Iterable[int]) -> "Monomial":
        return cls(variables, {i: e for i, e in enumerate(exps) if e})

    @property
    def variables(self) -> VariableSet:
        return self._vars

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self._exps)

    @property
    def degree(self) -> int:
        return self._degree

    def exponent(self, idx: int) -> int:
        return self._exps.get(idx, 0)

    def dense(self) -> tuple[int, ...]:
        return tuple(self._exps.get(i, 0) for i in range(len(self._vars)))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._exps)

    @property
    def is_unit(self) -> bool:
        return not self._exps

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for e in self._exps.values())

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        out = dict(self._exps)
        for idx, e in other._exps.items():
            out[idx] = out.get(idx, 0) + e
        return Monomial(self._vars, out)

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power")
        return Monomial(self._vars, {i: e * k for i, e in self._exps.items()})

    def divides(self, other: "Monomial") -> bool:
        _check_same_ring(self, other)
        return all(other._exps.get(i, 0) >= e for i, e in self._exps.items())

    def __truediv__(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        out = dict(self._exps)
        for idx, e in other._exps.items():
            rem = out[idx] - e
            if rem:
                out[idx] = rem
            else:
                del out[idx]
        return Monomial(self._vars, out)

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        out = dict(self._exps)
        for idx, e in other._exps.items():
            if e > out.get(idx, 0):
                out[idx] = e
        return Monomial(self._vars, out)

    def gcd(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        return Monomial(
            self._vars,
            {i: min(e, other._exps[i]) for i, e in self._exps.items() if i in other._exps},
        )

    def grlex_key(self) -> tuple:
        """Sort key: graded, then lexicographic in variable-set order."""
        return (self._degree, self.dense())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Monomial)
            and self._vars == other._vars
            and self._exps == other._exps
        )

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        parts = []
        for idx in sorted(self._exps):
            name = self._vars.names[idx]
            e = self._exps[idx]
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def lcm(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise maximum of exponent vectors."""
    return a.lcm(b)


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return a.gcd(b)


def parse_monomial(text: str, variables: VariableSet) -> Monomial:
    """Parse the canonical ``x1^2*x3`` form (also accepts unordered factors)."""
    text = text.strip()
    if not text:
        raise ParseError("empty monomial text")
    if text == "1":
        return Monomial.unit(variables)
    exps: dict[int, int] = {}
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            raise ParseError(f"empty factor in {text!r}")
        if "^" in factor:
            name, _, raw = factor.partition("^")
            name = name.strip()
            try:
                e = int(raw)
            except ValueError:
                raise ParseError(f"bad exponent in factor {factor!r}") from None
            if e <= 0:
                raise ParseError(f"exponent must be positive in {factor!r}")
        else:
            name, e = factor, 1
        idx = variables.index(name)
        exps[idx] = exps.get(idx, 0) + e
    return Monomial(variables, exps)
