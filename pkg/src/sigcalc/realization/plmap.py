"""Exact increasing piecewise-linear bijections of [0,1].

Breakpoints are Fractions; maps are stored in minimal form (no collinear
interior breakpoints), so equality of maps is equality of breakpoint tuples.
No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

Rat = Fraction
Point = Tuple[Fraction, Fraction]


class PLError(ValueError):
    pass


def _canonical(points: Sequence[Point]) -> Tuple[Point, ...]:
    pts = sorted(set((Fraction(x), Fraction(y)) for x, y in points))
    if not pts or pts[0] != (0, 0) or pts[-1] != (1, 1):
        raise PLError("breakpoints must run from (0,0) to (1,1)")
    for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
        if x2 <= x1 or y2 <= y1:
            raise PLError("breakpoints must be strictly increasing in both coordinates")
    # drop interior points collinear with their neighbours
    out: List[Point] = [pts[0]]
    for i in range(1, len(pts) - 1):
        x0, y0 = out[-1]
        x1, y1 = pts[i]
        x2, y2 = pts[i + 1]
        if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
            continue
        out.append(pts[i])
    out.append(pts[-1])
    return tuple(out)


class PLMap:
    """An increasing PL bijection of [0,1], composed left to right."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[Point]):
        object.__setattr__(self, "points", _canonical(list(points)))

    def __setattr__(self, name, value):
        raise AttributeError("PLMap is immutable")

    @staticmethod
    def identity() -> "PLMap":
        return PLMap([(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))])

    @property
    def is_identity(self) -> bool:
        return len(self.points) == 2

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        pts = self.points
        if not (0 <= x <= 1):
            raise PLError(f"{x} outside [0,1]")
        lo, hi = 0, len(pts) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if pts[mid][0] <= x:
                lo = mid
            else:
                hi = mid
        (x1, y1), (x2, y2) = pts[lo], pts[hi]
        if x == x1:
            return y1
        return y1 + (y2 - y1) * (x - x1) / (x2 - x1)

    def inverse(self) -> "PLMap":
        return PLMap([(y, x) for x, y in self.points])

    def then(self, other: "PLMap") -> "PLMap":
        """The composition apply-self-then-other."""
        inv = self.inverse()
        xs = {x for x, _ in self.points}
        xs.update(inv(x) for x, _ in other.points)
        return PLMap([(x, other(self(x))) for x in sorted(xs)])

    def __mul__(self, other):
        if not isinstance(other, PLMap):
            return NotImplemented
        return self.then(other)

    def __pow__(self, k: int) -> "PLMap":
        if k == 0:
            return PLMap.identity()
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out.then(base)
        return out

    def __eq__(self, other):
        return isinstance(other, PLMap) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        pts = ", ".join(f"({x},{y})" for x, y in self.points)
        return f"PLMap([{pts}])"

    def orbitals(self) -> List[Tuple[Fraction, Fraction, int]]:
        """Maximal open intervals where the map moves points, with signs.

        Returns (u, v, sign) triples with sign +1 where f(x) > x and -1
        where f(x) < x; the map fixes u and v.  Interior crossings of the
        diagonal are located exactly.
        """
        pieces: List[Tuple[Fraction, Fraction, int]] = []
        for (x1, y1), (x2, y2) in zip(self.points, self.points[1:]):
            d1, d2 = y1 - x1, y2 - x2
            if d1 == 0 and d2 == 0:
                continue
            if d1 >= 0 and d2 >= 0:
                pieces.append((x1, x2, 1))
            elif d1 <= 0 and d2 <= 0:
                pieces.append((x1, x2, -1))
            else:
                s = (y2 - y1) / (x2 - x1)
                xstar = (y1 - s * x1) / (1 - s)
                pieces.append((x1, xstar, 1 if d1 > 0 else -1))
                pieces.append((xstar, x2, 1 if d2 > 0 else -1))
        out: List[Tuple[Fraction, Fraction, int]] = []
        for u, v, sign in pieces:
            if out:
                pu, pv, psign = out[-1]
                if pv == u and psign == sign and self(u) != u:
                    out[-1] = (pu, v, sign)
                    continue
            out.append((u, v, sign))
        return out

    def support_hull(self) -> Tuple[Fraction, Fraction]:
        orbs = self.orbitals()
        if not orbs:
            raise PLError("identity map has empty support")
        return orbs[0][0], orbs[-1][1]


def affine_image(points: Iterable[Point], lo, hi) -> List[Point]:
    """Map breakpoint coordinates through x -> lo + (hi-lo)x on both axes."""
    lo, hi = Fraction(lo), Fraction(hi)
    w = hi - lo
    return [(lo + w * x, lo + w * y) for x, y in points]
