"""Power sums, Newton's identities and the set-X argument, evaluated on concrete witnesses.

Everything is computed in Z/pZ. For a genuine witness ``x`` of dimension n the
even power sums ``S_2k = sum x_i^(2k)`` satisfy

    (4^k + 4n + 2) S_2k + 2 sum_{t=1}^{k-1} C(2k, 2t) S_2t S_2(k-t)  ==  0   (p-1 does not divide 2k)
                                                                      == -1   (p-1 divides 2k)

because the left side is the sum of z^(2k) over all of Z/pZ.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .criterion import INFINITE, check_n, x_set_member
from .witness import Witness

__all__ = [
    "PowerSums",
    "ElementarySymmetric",
    "LemmaReport",
    "power_sums",
    "binomial_row_mod",
    "master_identity_lhs",
    "check_master_identity",
    "newton_elementary",
    "residue_power_sum",
    "check_lemma_chain",
]


@dataclass
class PowerSums:
    p: int
    n: int
    S: dict[int, int]  # k -> S_{2k} mod p

    def __getitem__(self, k):
        try:
            return self.S[k]
        except KeyError:
            raise KeyError(f"S_{2 * k} was not computed (k={k})") from None


@dataclass
class ElementarySymmetric:
    p: int
    n: int
    e: dict[int, int]  # k -> e_k mod p, e_0 = 1


def power_sums(x, p: int, k_max: int) -> PowerSums:
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    squares = [v * v % p for v in x]
    powers = list(squares)
    S = {}
    for k in range(1, k_max + 1):
        S[k] = sum(powers) % p
        powers = [a * b % p for a, b in zip(powers, squares)]
    return PowerSums(p, len(squares), S)


def binomial_row_mod(m: int, p: int) -> list[int]:
    """``[C(m, 0), ..., C(m, m)] mod p`` by Pascal's rule, never dividing."""
    row = [1]
    for _ in range(m):
        row = [1] + [(a + b) % p for a, b in zip(row, row[1:])] + [1]
    return [v % p for v in row]


def master_identity_lhs(ps: PowerSums, n: int, p: int, k: int) -> int:
    binom = binomial_row_mod(2 * k, p)
    cross = sum(binom[2 * t] * ps[t] * ps[k - t] for t in range(1, k))
    return ((pow(4, k, p) + 4 * n + 2) * ps[k] + 2 * cross) % p


def check_master_identity(ps: PowerSums, n: int, p: int, k_range) -> dict[int, bool]:
    result = {}
    for k in k_range:
        rhs = -1 % p if (2 * k) % (p - 1) == 0 else 0
        result[k] = master_identity_lhs(ps, n, p, k) == rhs
    return result


def newton_elementary(ps: PowerSums, n: int, p: int) -> ElementarySymmetric:
    """Elementary symmetric polynomials of ``x_1^2, ..., x_n^2`` from the power sums.

    ``k e_k = sum_{t=1}^{k} (-1)^(t-1) e_{k-t} S_2t``; needs p > n to divide by k.
    """
    if p <= n:
        raise ValueError("Newton's identities need p > n")
    e = {0: 1}
    for k in range(1, n + 1):
        acc = 0
        for t in range(1, k + 1):
            term = e[k - t] * ps[t]
            acc += term if t % 2 else -term
        e[k] = acc * pow(k, -1, p) % p
    return ElementarySymmetric(p, n, e)


def residue_power_sum(p: int, exponent: int) -> int:
    """``sum_{z in Z/pZ} z^exponent mod p`` by direct summation."""
    return sum(pow(z, exponent, p) for z in range(p)) % p


@dataclass
class LemmaReport:
    n: int
    p: int
    a: int | str
    b: int
    lemma6: dict[int, bool] = field(default_factory=dict)  # k not in X -> S_2k == 0
    lemma7: dict[int, bool] = field(default_factory=dict)  # k not in X -> e_k == 0
    e_n_nonzero: bool = False
    n_in_X: bool = False

    @property
    def failures(self):
        bad = [f"lemma6 k={k}" for k, ok in self.lemma6.items() if not ok]
        bad += [f"lemma7 k={k}" for k, ok in self.lemma7.items() if not ok]
        if not self.e_n_nonzero:
            bad.append("e_n == 0")
        if not self.n_in_X:
            bad.append("n not in X")
        return bad

    @property
    def ok(self):
        return not self.failures


def check_lemma_chain(w: Witness, a=None, b=None, k_cap: int | None = None,
                      ps: PowerSums | None = None) -> LemmaReport:
    """Instance-check the chain S_2k = 0, e_k = 0 (k not in X), e_n != 0, n in X.

    ``a``/``b`` default to the exact values for ``w.n``. Power sums are checked for
    ``1 <= k < min((p-1)/2, k_cap)`` with ``k_cap = 2n + 4`` by default. Passing
    ``ps`` overrides the recomputed power sums (for fault injection). Any
    failure on a genuine witness is a bug.
    """
    if not w.is_valid():
        raise ValueError(f"{list(w.x)} is not a witness mod {w.p}")
    n, p = w.n, w.p
    if a is None or b is None:
        rep = check_n(n)
        a, b = rep.a, rep.b
    if k_cap is None:
        k_cap = 2 * n + 4
    k_hi = min((p - 1) // 2, k_cap)  # exclusive bound for Lemma 6
    if ps is None:
        ps = power_sums(w.x, p, max(n, k_hi))
    report = LemmaReport(n, p, a, b)
    for k in range(1, k_hi):
        if not x_set_member(k, a, b):
            report.lemma6[k] = ps[k] == 0
    e = newton_elementary(ps, n, p).e
    for k in range(1, n + 1):
        if not x_set_member(k, a, b):
            report.lemma7[k] = e[k] == 0
    report.e_n_nonzero = e[n] != 0
    report.n_in_X = a != INFINITE and x_set_member(n, a, b)
    return report
