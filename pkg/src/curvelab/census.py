"""Bounded censuses of curves with lazily computed intersection rows.

Curves are sorted by (total weight, vector), so the census at a smaller
bound is always a prefix of the census at a larger one; escalated searches
reuse indices of the base census unchanged.  Disjointness rows are stored as
Python ints used as bitsets.
"""

from __future__ import annotations

import logging
from .classify import CurveType, curve_type, genus_zero_side, side_key, PreconditionError
from .curves import NormalCurve, cyclic_path, enumerate_census
from .linking import intersection_from_paths
from .surface import IdealTriangulation

log = logging.getLogger(__name__)


class Census:
    def __init__(self, t: IdealTriangulation, bound: int, curves: list[NormalCurve] | None = None):
        self.triangulation = t
        self.bound = bound
        self.curves = curves if curves is not None else enumerate_census(t, bound)
        self.index = {c.weights: k for k, c in enumerate(self.curves)}
        self._paths: list | None = None
        self._rows: dict[int, list[int]] = {}
        self._types: dict[int, CurveType] = {}
        self._sides: dict[tuple[int, int], frozenset[int]] = {}
        self._escalated: dict[int, "Census"] = {}
        self._disjoint_masks: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)

    def prefix(self, bound: int) -> int:
        """Number of curves of total weight <= bound."""
        return sum(1 for c in self.curves if c.total_weight <= bound)

    def escalate(self, extra: int) -> "Census":
        """Census at ``bound + extra`` sharing this census's rows where possible."""
        if extra <= 0:
            return self
        if extra not in self._escalated:
            big = Census(self.triangulation, self.bound + extra)
            assert big.curves[: len(self)] == self.curves
            self._escalated[extra] = big
        return self._escalated[extra]

    @property
    def paths(self) -> list:
        if self._paths is None:
            self._paths = [cyclic_path(c) for c in self.curves]
        return self._paths

    def row(self, k: int) -> list[int]:
        """Intersection numbers of curve ``k`` with every census curve."""
        r = self._rows.get(k)
        if r is None:
            t, P = self.triangulation, self.paths
            r = []
            for j in range(len(self.curves)):
                if j == k:
                    r.append(0)
                elif j in self._rows:
                    r.append(self._rows[j][k])
                else:
                    r.append(intersection_from_paths(t, P[k], P[j]))
            self._rows[k] = r
        return r

    def i(self, a: int, b: int) -> int:
        if a in self._rows:
            return self._rows[a][b]
        return self.row(b)[a]

    def matrix(self) -> list[list[int]]:
        return [self.row(k) for k in range(len(self.curves))]

    def disjoint_mask(self, k: int) -> int:
        """Bitset of census curves disjoint from curve ``k`` (``k`` itself excluded)."""
        m = self._disjoint_masks.get(k)
        if m is None:
            m = 0
            for j, v in enumerate(self.row(k)):
                if v == 0 and j != k:
                    m |= 1 << j
            self._disjoint_masks[k] = m
        return m

    def type(self, k: int) -> CurveType:
        ty = self._types.get(k)
        if ty is None:
            ty = self._types[k] = curve_type(self.curves[k])
        return ty

    def mask_where(self, pred) -> int:
        m = 0
        for k in range(len(self.curves)):
            if pred(k):
                m |= 1 << k
        return m

    def side(self, z: int, a: int) -> frozenset[int]:
        """Puncture set naming the side of curve ``z`` that holds disjoint curve ``a``."""
        key = (z, a)
        s = self._sides.get(key)
        if s is None:
            s = self._sides[key] = side_key(self.curves[z], self.curves[a])
        return s

    def genus_zero_punctures(self, k: int) -> frozenset[int]:
        return genus_zero_side(self.curves[k]).punctures


def bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


__all__ = ["Census", "bits", "PreconditionError"]
