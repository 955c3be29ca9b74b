"""Backtracking search for homomorphisms Z^n -> Z/pZ that are bijective on S(n, 2).

A witness is ``x = (x_1, ..., x_n)`` with ``{0}, {+-x_i}, {+-2x_i}, {+-x_i +- x_j}``
partitioning Z/pZ, ``p = 2n^2 + 2n + 1`` prime. Such an ``x`` exists iff Z^n
is tiled by translates of S(n, 2).

Symmetries used: scaling ``x -> c x`` (c a unit), permutation of coordinates,
and sign flips of single coordinates. Every orbit contains a vector with all
entries in ``[1, (p-1)/2]``, sorted ascending, whose first entry is 1 (scale
by the inverse of any entry, flip signs, sort). The reduced search walks
exactly those vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import CodeSpec, Homomorphism, verify_homomorphism_bijective
from .modular import is_prime

__all__ = ["Witness", "SearchOutcome", "search", "canonicalize", "witness_to_code"]

SYMMETRY_NOTE = (
    "canonical form: entries sign-normalized to [1, (p-1)/2], sorted ascending, "
    "lexicographically least over all unit scalings; search fixes x_1 = 1"
)


@dataclass(frozen=True)
class Witness:
    n: int
    p: int
    x: tuple[int, ...]

    def is_valid(self):
        return (len(self.x) == self.n and all(v % self.p for v in self.x)
                and verify_homomorphism_bijective(self.p, self.n, self.x))


@dataclass
class SearchOutcome:
    witnesses: list[Witness] = field(default_factory=list)
    exhausted: bool = False
    nodes_explored: int = 0
    symmetry_classes_note: str = ""

    def to_dict(self):
        return {
            "witnesses": [list(w.x) for w in self.witnesses],
            "exhausted": self.exhausted,
            "nodes": self.nodes_explored,
        }


def _prime_for(n):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    p = 2 * n * n + 2 * n + 1
    if not is_prime(p):
        raise ValueError(f"2n^2+2n+1 = {p} is composite for n={n}")
    return p


class _NodeLimit(Exception):
    pass


def search(n: int, find_all: bool = False, node_limit: int | None = None,
           symmetry: bool = True) -> SearchOutcome:
    """Depth-first search for witnesses of dimension ``n``.

    With ``symmetry`` the returned witnesses are canonical orbit representatives;
    without it every witness vector in ``((Z/pZ)^*)^n`` is visited and returned
    as found. ``exhausted`` is False only when ``node_limit`` cut the traversal
    short, or when ``find_all`` is off and a witness stopped it early.
    """
    p = _prime_for(n)
    half = (p - 1) // 2
    out = SearchOutcome(symmetry_classes_note=SYMMETRY_NOTE if symmetry else "no symmetry reduction")
    xs = []
    found = []

    def place(mask, v):
        # marking order: +-v, +-2v, then cross terms against earlier entries
        new = [v, -v, 2 * v, -2 * v]
        for xj in xs:
            new += [v + xj, v - xj, xj - v, -v - xj]
        for w in new:
            bit = 1 << (w % p)
            if mask & bit:
                return None
            mask |= bit
        return mask

    def candidates(i):
        if not symmetry:
            return range(1, p)
        if i == 0:
            return (1,)
        return range(xs[-1] + 1, half + 1)

    def descend(mask):
        i = len(xs)
        if i == n:
            found.append(tuple(xs))
            return not find_all
        for v in candidates(i):
            new_mask = place(mask, v)
            if new_mask is None:
                continue
            out.nodes_explored += 1
            if node_limit is not None and out.nodes_explored > node_limit:
                raise _NodeLimit
            xs.append(v)
            stop = descend(new_mask)
            xs.pop()
            if stop:
                return True
        return False

    try:
        stopped = descend(1)  # bit 0 marks the residue 0
        out.exhausted = not stopped
    except _NodeLimit:
        out.nodes_explored = node_limit
        out.exhausted = False

    if symmetry:
        ws = {canonicalize(Witness(n, p, x)) for x in found}
    else:
        ws = {Witness(n, p, x) for x in found}
    for w in ws:
        if not w.is_valid():
            raise AssertionError(f"search produced an invalid witness {w}")
    out.witnesses = sorted(ws, key=lambda w: w.x)
    return out


def canonicalize(w: Witness) -> Witness:
    """Orbit representative under scaling, permutation and sign flips (idempotent)."""
    p = w.p
    best = None
    for c in range(1, (p - 1) // 2 + 1):
        form = tuple(sorted(min(c * v % p, p - c * v % p) for v in w.x))
        if best is None or form < best:
            best = form
    return Witness(w.n, p, best)


def witness_to_code(w: Witness) -> CodeSpec:
    if not w.is_valid():
        raise ValueError(f"{list(w.x)} is not a witness mod {w.p}")
    return CodeSpec(w.n, 2, w.p, Homomorphism(w.p, tuple(v % w.p for v in w.x)))

