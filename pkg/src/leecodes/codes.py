"""Lee codes in (Z/qZ)^n: representations, perfectness checks and classical constructions."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

import numpy as np

from .lee import lee_distance_torus, sphere_offsets, sphere_size
from .modular import is_prime

__all__ = [
    "TooLargeError",
    "Homomorphism",
    "Centers",
    "Lattice",
    "CodeSpec",
    "Status",
    "VerificationResult",
    "LiftedCode",
    "DEFAULT_MAX_POINTS",
    "materialize",
    "verify",
    "verify_homomorphism_bijective",
    "construct_gw",
    "lift_code",
    "project_code",
    "witness_is_valid",
    "code_size",
    "perfect_size_identity",
]

DEFAULT_MAX_POINTS = 10**9


class TooLargeError(RuntimeError):
    """The torus is too large for direct coverage counting. Not a verdict."""


@dataclass(frozen=True)
class Homomorphism:
    """Kernel of ``v -> sum(v_i * x_i) mod p``. ``p`` is the torus modulus."""

    p: int
    x: tuple[int, ...]


@dataclass(frozen=True)
class Centers:
    points: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Lattice:
    """Lattice spanned by the rows of ``basis``, reduced mod q."""

    basis: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CodeSpec:
    n: int
    e: int
    q: int
    repr: Homomorphism | Centers | Lattice

    def __post_init__(self):
        if self.n < 1 or self.e < 0:
            raise ValueError(f"need n >= 1 and e >= 0, got n={self.n}, e={self.e}")
        if self.q < 2 * self.e + 1:
            raise ValueError(f"q={self.q} must be at least 2e+1={2 * self.e + 1}")
        r = self.repr
        if isinstance(r, Homomorphism):
            if r.p != self.q:
                raise ValueError(f"homomorphism modulus {r.p} differs from q={self.q}")
            if len(r.x) != self.n:
                raise ValueError(f"need {self.n} generator images, got {len(r.x)}")
        elif isinstance(r, Centers):
            if not r.points:
                raise ValueError("empty code")
            if any(len(pt) != self.n for pt in r.points):
                raise ValueError("center dimension does not match n")
        elif isinstance(r, Lattice):
            if len(r.basis) != self.n or any(len(row) != self.n for row in r.basis):
                raise ValueError(f"lattice basis must be {self.n}x{self.n}")
        else:
            raise TypeError(f"unknown representation {type(r).__name__}")

    def to_dict(self):
        r = self.repr
        if isinstance(r, Homomorphism):
            rd = {"type": "homomorphism", "p": r.p, "x": list(r.x)}
        elif isinstance(r, Centers):
            rd = {"type": "centers", "points": [list(pt) for pt in r.points]}
        else:
            rd = {"type": "lattice", "basis": [list(row) for row in r.basis]}
        return {"n": self.n, "e": self.e, "q": self.q, "repr": rd}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d):
        rd = d["repr"]
        kind = rd.get("type")
        if kind == "homomorphism":
            r = Homomorphism(int(rd["p"]), tuple(int(v) for v in rd["x"]))
        elif kind == "centers":
            r = Centers(tuple(tuple(int(v) for v in pt) for pt in rd["points"]))
        elif kind == "lattice":
            r = Lattice(tuple(tuple(int(v) for v in row) for row in rd["basis"]))
        else:
            raise ValueError(f"unknown code representation type {kind!r}")
        return cls(int(d["n"]), int(d["e"]), int(d["q"]), r)


class Status(str, enum.Enum):
    PERFECT = "perfect"
    PACKING_ONLY = "packing_only"
    NOT_PACKING = "not_packing"


@dataclass(frozen=True)
class VerificationResult:
    status: Status
    witness: dict | None = None
    method: str = "coverage"

    def to_dict(self):
        return {"status": self.status.value, "witness": self.witness}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))


# -- lattice helpers --------------------------------------------------------


def _inverse(matrix):
    """Exact inverse over Q by Gauss-Jordan; returns (det, inverse) or (0, None)."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0, None
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        pv = a[col][col]
        det *= pv
        a[col] = [v / pv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [vr - f * vc for vr, vc in zip(a[r], a[col])]
    return int(det), [row[n:] for row in a]


def _lattice_points(code):
    n, q = code.n, code.q
    det, inv = _inverse(code.repr.basis)
    if det == 0:
        raise ValueError("lattice basis is singular")
    # q Z^n is inside the lattice iff q * B^-1 is integral
    if any((q * v).denominator != 1 for row in inv for v in row):
        raise ValueError(f"lattice does not contain {q}Z^{n}")
    gens = {tuple(v % q for v in row) for row in code.repr.basis}
    gens.discard((0,) * n)
    seen = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for pt in frontier:
            for g in gens:
                s = tuple((a + b) % q for a, b in zip(pt, g))
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    expected = q**n // abs(det)
    if len(seen) != expected:
        raise AssertionError(f"lattice closure has {len(seen)} points, expected {expected}")
    return np.array(sorted(seen), dtype=np.int64).reshape(-1, n)


def _grid(q, n):
    return np.indices((q,) * n, dtype=np.int64).reshape(n, -1).T


def _homomorphism_points(code):
    n, q = code.n, code.q
    x = np.array([v % q for v in code.repr.x], dtype=np.int64)
    pivot = next((j for j in range(n) if gcd(int(x[j]), q) == 1), None)
    if pivot is None:
        pts = _grid(q, n)
        return pts[(pts @ x) % q == 0]
    others = [j for j in range(n) if j != pivot]
    free = _grid(q, n - 1) if others else np.zeros((1, 0), dtype=np.int64)
    inv = pow(int(x[pivot]), -1, q)
    partial = (free @ x[others]) % q if others else np.zeros(1, dtype=np.int64)
    pts = np.empty((free.shape[0], n), dtype=np.int64)
    pts[:, others] = free
    pts[:, pivot] = (-inv * partial) % q
    return pts


def _centers_array(code, max_points=DEFAULT_MAX_POINTS):
    r = code.repr
    if isinstance(r, Centers):
        pts = np.array([[v % code.q for v in pt] for pt in r.points], dtype=np.int64)
    elif isinstance(r, Homomorphism):
        if code.q ** (code.n - 1) > max_points:
            raise TooLargeError(f"{code.q}^{code.n - 1} candidate centers exceed the limit {max_points}")
        pts = _homomorphism_points(code)
    else:
        if code.q**code.n > max_points:
            raise TooLargeError(f"{code.q}^{code.n} points exceed the limit {max_points}")
        pts = _lattice_points(code)
    pts = np.unique(pts.reshape(-1, code.n), axis=0)
    if len(pts) == 0:
        raise ValueError("empty code")
    return pts


def materialize(code: CodeSpec, max_points=DEFAULT_MAX_POINTS) -> list[tuple[int, ...]]:
    """Explicit, sorted, deduplicated center list of ``code``."""
    return [tuple(int(v) for v in pt) for pt in _centers_array(code, max_points)]


# -- verification -----------------------------------------------------------


def _unflatten(index, q, n):
    out = []
    for _ in range(n):
        index, r = divmod(index, q)
        out.append(r)
    return tuple(reversed(out))


def _covering_centers(point, centers, q, e):
    diff = np.abs(centers - np.array(point, dtype=np.int64)) % q
    dist = np.minimum(diff, q - diff).sum(axis=1)
    return [tuple(int(v) for v in c) for c in centers[dist <= e]]


def _verify_by_bijectivity(code):
    n, e, p = code.n, code.e, code.q
    x = [v % p for v in code.repr.x]
    seen = {}
    for s in sphere_offsets(n, e):
        img = sum(si * xi for si, xi in zip(s, x)) % p
        if img in seen:
            # s and s' share an image, so s - s' is a nonzero center and the
            # point s is covered from both 0 and s - s'
            s0 = seen[img]
            point = tuple(v % p for v in s)
            other = tuple((a - b) % p for a, b in zip(s, s0))
            return VerificationResult(
                Status.NOT_PACKING,
                {"point": list(point), "centers": [[0] * n, list(other)]},
                method="bijectivity",
            )
        seen[img] = s
    return VerificationResult(Status.PERFECT, None, method="bijectivity")


def verify(code: CodeSpec, max_points=DEFAULT_MAX_POINTS) -> VerificationResult:
    """Classify ``code`` as perfect, packing only, or not a packing.

    Coverage is counted exactly over all q^n torus points (one saturating byte
    per point). The witness is the lexicographically least doubly covered point
    (with two of its centers) or, for a packing, the least uncovered point.

    A homomorphism code with prime modulus ``p = |S(n, e)|`` beyond the size
    limit is decided by bijectivity of the map on S(n, e): its kernel has index
    p, so |C| * |S| = p^n and bijectivity is equivalent to perfectness.
    """
    n, e, q = code.n, code.e, code.q
    total = q**n
    if total > max_points:
        r = code.repr
        if (isinstance(r, Homomorphism) and is_prime(q) and q == sphere_size(n, e)
                and any(v % q for v in r.x)):
            return _verify_by_bijectivity(code)
        raise TooLargeError(f"{q}^{n} = {total} torus points exceed the limit {max_points}")

    centers = _centers_array(code, max_points)
    weights = np.array([q ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    cover = np.zeros(total, dtype=np.uint8)
    for off in sphere_offsets(n, e):
        idx = ((centers + np.array(off, dtype=np.int64)) % q) @ weights
        # distinct centers give distinct translates, so no repeated indices here
        cover[idx] = np.minimum(cover[idx] + 1, 2)

    doubled = np.flatnonzero(cover >= 2)
    if len(doubled):
        point = _unflatten(int(doubled[0]), q, n)
        covering = _covering_centers(point, centers, q, e)[:2]
        return VerificationResult(
            Status.NOT_PACKING, {"point": list(point), "centers": [list(c) for c in covering]}
        )
    missing = np.flatnonzero(cover == 0)
    if len(missing):
        return VerificationResult(
            Status.PACKING_ONLY, {"point": list(_unflatten(int(missing[0]), q, n))}
        )
    return VerificationResult(Status.PERFECT, None)


def witness_is_valid(result: VerificationResult, code: CodeSpec) -> bool:
    """Re-check that a verification witness really shows what its status claims."""
    if result.witness is None:
        return result.status is Status.PERFECT
    point = result.witness["point"]
    n, e, q = code.n, code.e, code.q
    centers = set(materialize(code)) if result.method == "coverage" else None
    if result.status is Status.PACKING_ONLY:
        return all(lee_distance_torus(point, c, q) > e for c in centers)
    c1, c2 = (tuple(c) for c in result.witness["centers"])
    if c1 == c2:
        return False
    if centers is not None and not {c1, c2} <= centers:
        return False
    if centers is None:
        x = code.repr.x
        if any(sum(a * b for a, b in zip(c, x)) % q for c in (c1, c2)):
            return False
    return (lee_distance_torus(point, c1, q) <= e and lee_distance_torus(point, c2, q) <= e
            and lee_distance_torus(c1, c2, q) <= 2 * e and len(point) == n)


def verify_homomorphism_bijective(p: int, n: int, x) -> bool:
    """Whether ``{0}, {+-x_i}, {+-2x_i}, {+-x_i +- x_j}`` partition Z/pZ.

    Equivalent to the map ``e_i -> x_i`` being a bijection from S(n, 2) onto
    Z/pZ. O(n^2) work, no torus enumeration.
    """
    if p != 2 * n * n + 2 * n + 1:
        raise ValueError(f"p={p} is not 2n^2+2n+1 for n={n}")
    if len(x) != n:
        raise ValueError(f"need {n} values, got {len(x)}")
    x = [v % p for v in x]
    values = [0]
    for i, xi in enumerate(x):
        values += [xi, -xi, 2 * xi, -2 * xi]
        for xj in x[:i]:
            values += [xi + xj, xi - xj, xj - xi, -xi - xj]
    return len({v % p for v in values}) == p


# -- constructions ----------------------------------------------------------


def construct_gw(kind: str, param: int) -> CodeSpec:
    """The three classical perfect Lee code families.

    ``dim1``: ``{0}`` in Z/(2e+1). ``radius1``: kernel of ``x = (1, 2, ..., n)``
    in (Z/(2n+1))^n. ``dim2``: lattice with rows ``(e+1, e)`` and ``(-e, e+1)``
    in (Z/(2e^2+2e+1))^2. None of these is assumed perfect; run :func:`verify`.
    """
    if param < 1:
        raise ValueError(f"parameter must be >= 1, got {param}")
    if kind == "dim1":
        e = param
        return CodeSpec(1, e, 2 * e + 1, Centers(((0,),)))
    if kind == "dim2":
        e = param
        return CodeSpec(2, e, 2 * e * e + 2 * e + 1, Lattice(((e + 1, e), (-e, e + 1))))
    if kind == "radius1":
        n = param
        q = 2 * n + 1
        return CodeSpec(n, 1, q, Homomorphism(q, tuple(range(1, n + 1))))
    raise ValueError(f"unknown construction {kind!r}")


# -- Z^n lift ---------------------------------------------------------------


@dataclass(frozen=True)
class LiftedCode:
    """A code in Z^n that is a union of cosets of qZ^n.

    The code is ``{r + q z : r in representatives, z in Z^n}``; representatives
    are the canonical ones with coordinates in ``[0, q)``.
    """

    n: int
    e: int
    q: int
    representatives: tuple[tuple[int, ...], ...]

    def __contains__(self, point):
        return tuple(v % self.q for v in point) in set(self.representatives)

    def translates(self, radius: int):
        """Code points with every coordinate in ``[-radius, radius]``, sorted."""
        out = []
        for r in self.representatives:
            ranges = [range(-((radius + v) // self.q), (radius - v) // self.q + 1) for v in r]
            for z in np.ndindex(*[len(rg) for rg in ranges]):
                out.append(tuple(v + self.q * rg[k] for v, rg, k in zip(r, ranges, z)))
        return sorted(out)


def lift_code(code: CodeSpec) -> LiftedCode:
    reps = tuple(materialize(code))
    return LiftedCode(code.n, code.e, code.q, reps)


def project_code(representatives, q: int, n: int, e: int) -> CodeSpec:
    pts = sorted({tuple(v % q for v in pt) for pt in representatives})
    return CodeSpec(n, e, q, Centers(tuple(pts)))


def code_size(code: CodeSpec) -> int:
    return len(materialize(code))


def perfect_size_identity(code: CodeSpec) -> bool:
    """``|C| * |S(n, e)| == q^n``, necessary for perfectness."""
    return code_size(code) * sphere_size(code.n, code.e) == prod([code.q] * code.n)
