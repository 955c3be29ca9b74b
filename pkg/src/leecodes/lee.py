"""Lee metric on Z^n and (Z/qZ)^n, and enumeration of Lee spheres."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

__all__ = [
    "LeeSphere",
    "lee_distance_torus",
    "lee_norm_z",
    "enumerate_sphere",
    "sphere_size",
    "sphere_offsets",
]


@dataclass(frozen=True)
class LeeSphere:
    """All points at Lee norm <= e, sorted lexicographically.

    ``q is None`` means the ambient space is Z^n; otherwise points are
    canonical residues in ``[0, q)``.
    """

    n: int
    e: int
    q: int | None
    points: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.points)

    def __contains__(self, point):
        return tuple(point) in self.points

    def dump(self):
        return "".join(" ".join(map(str, pt)) + "\n" for pt in self.points)


def lee_distance_torus(x, y, q: int) -> int:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} != {len(y)}")
    total = 0
    for xi, yi in zip(x, y):
        d = abs(xi - yi) % q
        total += min(d, q - d)
    return total


def lee_norm_z(x) -> int:
    return sum(abs(v) for v in x)


def sphere_offsets(n: int, e: int):
    """Yield the points of S(n, e) in lexicographic order by radius-budget descent."""
    if n < 1 or e < 0:
        raise ValueError(f"need n >= 1 and e >= 0, got n={n}, e={e}")
    prefix = []

    def descend(budget):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(-budget, budget + 1):
            prefix.append(v)
            yield from descend(budget - abs(v))
            prefix.pop()

    yield from descend(e)


def enumerate_sphere(n: int, e: int, q: int | None = None) -> LeeSphere:
    if q is not None and q < 2 * e + 1:
        raise ValueError(f"q={q} < 2e+1={2 * e + 1}: projection of S(n,e) is not injective")
    points = list(sphere_offsets(n, e))
    if q is not None:
        points = sorted(tuple(v % q for v in pt) for pt in points)
    return LeeSphere(n, e, q, tuple(points))


def sphere_size(n: int, e: int) -> int:
    """``sum_k 2^k C(n,k) C(e,k)``: choose k nonzero coordinates, their signs, and
    a composition of at most e into k positive parts."""
    if n < 1 or e < 0:
        raise ValueError(f"need n >= 1 and e >= 0, got n={n}, e={e}")
    return sum(2**k * comb(n, k) * comb(e, k) for k in range(min(n, e) + 1))
