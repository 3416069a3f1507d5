"""Point sets in S^k, solution sets of equations, and algebraic closure.

A set is algebraic when it is exactly the solution set of some system of
equations.  The closure operator computed here intersects the solution
sets of *all* equations that hold on the input set; a set is algebraic
precisely when that closure adds no points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .semigroups import Semigroup
from .terms import (
    DEFAULT_BUDGET,
    Equation,
    System,
    TermFunction,
    coordinate_grid,
    decode_point,
    encode_point,
    term_functions,
)

__all__ = [
    "POINT_ENCODING",
    "PointSet",
    "solution_set",
    "union_target_m3",
    "union_target_m4",
    "ClosureCertificate",
    "algebraic_closure",
    "is_algebraic",
]

POINT_ENCODING = "big-endian"  # coordinate 0 is the most significant digit


class PointSet:
    """An immutable subset of S^k, bit-indexed by encoded points."""

    __slots__ = ("n", "k", "mask")

    def __init__(self, n: int, k: int, mask: int = 0):
        if n < 1 or k < 1:
            raise ValueError("n and k must be >= 1")
        if not 0 <= mask < 1 << n**k:
            raise ValueError("mask has bits outside the point space")
        self.n = n
        self.k = k
        self.mask = mask

    @classmethod
    def empty(cls, n: int, k: int) -> "PointSet":
        return cls(n, k, 0)

    @classmethod
    def full(cls, n: int, k: int) -> "PointSet":
        return cls(n, k, (1 << n**k) - 1)

    @classmethod
    def from_points(cls, n: int, k: int, points) -> "PointSet":
        mask = 0
        for p in points:
            p = tuple(p)
            if len(p) != k:
                raise ValueError(f"point {p} does not have {k} coordinates")
            mask |= 1 << encode_point(p, n)
        return cls(n, k, mask)

    @classmethod
    def _from_bool(cls, flags: np.ndarray, n: int, k: int) -> "PointSet":
        mask = 0
        for i in np.flatnonzero(flags):
            mask |= 1 << int(i)
        return cls(n, k, mask)

    def _bool_array(self) -> np.ndarray:
        size = self.n**self.k
        m = self.mask
        return np.array([(m >> i) & 1 for i in range(size)], dtype=bool)

    def _check_compatible(self, other: "PointSet"):
        if self.n != other.n or self.k != other.k:
            raise ValueError("point sets live over different (n, k) spaces")

    def union(self, other: "PointSet") -> "PointSet":
        self._check_compatible(other)
        return PointSet(self.n, self.k, self.mask | other.mask)

    def intersection(self, other: "PointSet") -> "PointSet":
        self._check_compatible(other)
        return PointSet(self.n, self.k, self.mask & other.mask)

    def difference(self, other: "PointSet") -> "PointSet":
        self._check_compatible(other)
        return PointSet(self.n, self.k, self.mask & ~other.mask)

    def complement(self) -> "PointSet":
        return PointSet(self.n, self.k, self.mask ^ ((1 << self.n**self.k) - 1))

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def issubset(self, other: "PointSet") -> bool:
        self._check_compatible(other)
        return self.mask & ~other.mask == 0

    def contains_index(self, index: int) -> bool:
        return bool((self.mask >> index) & 1)

    def __contains__(self, point) -> bool:
        return self.contains_index(encode_point(tuple(point), self.n))

    def least_point(self) -> tuple[int, ...] | None:
        """The member with the least encoding, or None when empty."""
        if self.mask == 0:
            return None
        idx = (self.mask & -self.mask).bit_length() - 1
        return decode_point(idx, self.n, self.k)

    def __iter__(self):
        m = self.mask
        while m:
            low = m & -m
            yield decode_point(low.bit_length() - 1, self.n, self.k)
            m ^= low

    def __len__(self):
        return self.mask.bit_count()

    def __eq__(self, other):
        return (
            isinstance(other, PointSet)
            and (self.n, self.k, self.mask) == (other.n, other.k, other.mask)
        )

    def __hash__(self):
        return hash((self.n, self.k, self.mask))

    def __repr__(self):
        return f"PointSet(n={self.n}, k={self.k}, size={len(self)})"

    def to_points_obj(self) -> dict:
        """JSON form: decoded tuples sorted by encoding."""
        return {"n": self.n, "k": self.k, "points": [list(p) for p in self]}

    def to_bitmap_obj(self) -> dict:
        """Compact JSON form: hex bitmap plus the (n, k, encoding) header."""
        width = (self.n**self.k + 3) // 4
        return {
            "n": self.n,
            "k": self.k,
            "encoding": POINT_ENCODING,
            "bitmap": format(self.mask, f"0{width}x"),
        }

    @classmethod
    def from_jsonable(cls, obj, n: int | None = None, k: int | None = None) -> "PointSet":
        """Accepts a bare list of points or either serialized object form."""
        if isinstance(obj, list):
            if n is None or k is None:
                raise ValueError("a bare point list needs explicit n and k")
            return cls.from_points(n, k, obj)
        if not isinstance(obj, dict):
            raise ValueError("expected a list of points or a point-set object")
        n = int(obj.get("n", n if n is not None else 0))
        k = int(obj.get("k", k if k is not None else 0))
        if "encoding" in obj and obj["encoding"] != POINT_ENCODING:
            raise ValueError(f"unsupported point encoding {obj['encoding']!r}")
        if "bitmap" in obj:
            return cls(n, k, int(obj["bitmap"], 16))
        if "points" in obj:
            return cls.from_points(n, k, obj["points"])
        raise ValueError("point-set object needs a 'points' or 'bitmap' field")


def _term_values(S: Semigroup, term, grid_u8, table_u8) -> np.ndarray:
    v = grid_u8[term.word[0]]
    for letter in term.word[1:]:
        v = table_u8[v, grid_u8[letter]]
    return v


def solution_set(S: Semigroup, obj: Equation | System) -> PointSet:
    """All points satisfying the equation, or every equation of the system."""
    if isinstance(obj, Equation):
        equations = (obj,)
        k = obj.arity
    elif isinstance(obj, System):
        equations = obj.equations
        k = obj.arity
    else:
        raise TypeError("expected an Equation or a System")
    n = S.order
    table_u8 = S.as_array().astype(np.uint8)
    grid_u8 = coordinate_grid(n, k).astype(np.uint8)
    keep = np.ones(n**k, dtype=bool)
    for eq in equations:
        lhs = _term_values(S, eq.lhs, grid_u8, table_u8)
        rhs = _term_values(S, eq.rhs, grid_u8, table_u8)
        keep &= lhs == rhs
    return PointSet._from_bool(keep, n, k)


def union_target_m3(S: Semigroup) -> PointSet:
    """{p in S^3 : p0 = p1 or p0 = p2} — the 3-variable union of two diagonals."""
    grid = coordinate_grid(S.order, 3)
    keep = (grid[0] == grid[1]) | (grid[0] == grid[2])
    return PointSet._from_bool(keep, S.order, 3)


def union_target_m4(S: Semigroup) -> PointSet:
    """{p in S^4 : p0 = p1 or p2 = p3} — the 4-variable union of two diagonals."""
    grid = coordinate_grid(S.order, 4)
    keep = (grid[0] == grid[1]) | (grid[2] == grid[3])
    return PointSet._from_bool(keep, S.order, 4)


@dataclass(frozen=True)
class ClosureCertificate:
    """Why the closure is what it is.

    ``agreeing_pairs`` holds, for every class of term functions that agree
    on the input set, the pairs (representative, other member); the closure
    is exactly the intersection of the equality sets of these pairs, and it
    always contains the input set.
    """

    agreeing_pairs: tuple[tuple[TermFunction, TermFunction], ...]
    closure: PointSet


def algebraic_closure(S: Semigroup, Y: PointSet, budget: int = DEFAULT_BUDGET) -> ClosureCertificate:
    """Smallest algebraic superset of Y, with representative equations.

    Computes all term functions of the arity of Y, groups them by their
    restriction to Y (two functions agreeing on Y give an equation that
    holds on Y), and keeps the points where every group is still constant.
    Grouping makes this linear in the number of functions instead of
    quadratic over function pairs.
    """
    if Y.n != S.order:
        raise ValueError("point set is over a different order")
    funcs = term_functions(S, Y.k, budget=budget)
    npoints = Y.n**Y.k
    vectors = [np.frombuffer(f.values, dtype=np.uint8) for f in funcs]
    y_idx = np.flatnonzero(Y._bool_array())
    groups: dict[bytes, list[int]] = {}
    for fi, vec in enumerate(vectors):
        groups.setdefault(vec[y_idx].tobytes(), []).append(fi)
    keep = np.ones(npoints, dtype=bool)
    pairs = []
    for members in groups.values():
        if len(members) < 2:
            continue
        stacked = np.stack([vectors[m] for m in members])
        keep &= (stacked == stacked[0]).all(axis=0)
        rep = funcs[members[0]]
        pairs.extend((rep, funcs[m]) for m in members[1:])
    closure = PointSet._from_bool(keep, Y.n, Y.k)
    return ClosureCertificate(tuple(pairs), closure)


def is_algebraic(
    S: Semigroup, Y: PointSet, budget: int = DEFAULT_BUDGET
) -> tuple[bool, tuple[int, ...] | None]:
    """Whether Y is a solution set; if not, also the least point the closure adds."""
    cert = algebraic_closure(S, Y, budget=budget)
    if cert.closure == Y:
        return True, None
    return False, cert.closure.difference(Y).least_point()
