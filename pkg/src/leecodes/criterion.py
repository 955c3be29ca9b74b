"""Number-theoretic nonexistence test for perfect 2-error-correcting Lee codes.

For ``p = 2n^2 + 2n + 1`` prime, let ``a`` be the least positive exponent with
``4^a == -(4n + 2) (mod p)`` (``INFINITE`` if none) and ``b`` the multiplicative
order of 4 mod ``p``. If ``a(x + 1) + b y = n`` has no solution in nonnegative
integers, no PL(n, 2)-code exists.
"""

from __future__ import annotations

import bisect
import enum
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .modular import factorize_p_minus_1, is_prime, multiplicative_order, subgroup_dlog

__all__ = [
    "INFINITE",
    "GT_N",
    "Verdict",
    "CriterionReport",
    "ScanTable",
    "sphere_prime",
    "check_n",
    "check_n_fast",
    "x_set_member",
    "solve_equation",
    "scan",
]

#: ``a`` does not exist: ``-(4n+2)`` is not a power of 4 mod p.
INFINITE = "infinite"
#: Fast path only: the exponent was not reached within ``1..n``.
GT_N = "gt_n"


class Verdict(str, enum.Enum):
    COMPOSITE_P = "composite_p"
    CRITERION_SILENT = "criterion_silent"
    NONEXISTENCE_PROVEN = "nonexistence_proven"


@dataclass(frozen=True)
class CriterionReport:
    n: int
    p: int
    p_is_prime: bool
    a: int | str | None
    b: int | str | None
    solution: tuple[int, int] | None
    verdict: Verdict

    def to_dict(self):
        return {
            "n": self.n,
            "p": self.p,
            "p_is_prime": self.p_is_prime,
            "a": self.a,
            "b": self.b,
            "solution": list(self.solution) if self.solution is not None else None,
            "verdict": self.verdict.value,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d):
        sol = d["solution"]
        return cls(
            n=d["n"],
            p=d["p"],
            p_is_prime=d["p_is_prime"],
            a=d["a"],
            b=d["b"],
            solution=tuple(sol) if sol is not None else None,
            verdict=Verdict(d["verdict"]),
        )


@dataclass
class ScanTable:
    thresholds: list[int]
    prime_counts: list[int] = field(default_factory=list)
    applicable_counts: list[int] = field(default_factory=list)

    def rows(self):
        return list(zip(self.thresholds, self.prime_counts, self.applicable_counts))

    def to_csv(self):
        lines = ["threshold,prime_count,applicable_count"]
        lines += [f"{t},{pc},{ac}" for t, pc, ac in self.rows()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text):
        lines = text.strip().splitlines()
        if lines[0] != "threshold,prime_count,applicable_count":
            raise ValueError(f"unexpected header: {lines[0]!r}")
        table = cls(thresholds=[])
        for line in lines[1:]:
            t, pc, ac = (int(v) for v in line.split(","))
            table.thresholds.append(t)
            table.prime_counts.append(pc)
            table.applicable_counts.append(ac)
        return table


def sphere_prime(n: int) -> int:
    """``|S(n, 2)| = 2n^2 + 2n + 1``."""
    return 2 * n * n + 2 * n + 1


def _check_positive(n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def solve_equation(n, a, b):
    """Least-``x`` nonnegative solution of ``a(x+1) + b y = n``, or None.

    ``a`` or ``b`` may be a sentinel; ``INFINITE``/``GT_N`` for ``a`` means
    ``a > n`` so nothing fits, and ``GT_N`` for ``b`` forces ``y = 0``.
    """
    if not isinstance(a, int):
        return None
    x = 0
    while a * (x + 1) <= n:
        rest = n - a * (x + 1)
        if isinstance(b, int):
            if rest % b == 0:
                return (x, rest // b)
        elif rest == 0:
            return (x, 0)
        x += 1
    return None


def _verdict(p_prime, solution):
    if not p_prime:
        return Verdict.COMPOSITE_P
    return Verdict.NONEXISTENCE_PROVEN if solution is None else Verdict.CRITERION_SILENT


def check_n(n: int) -> CriterionReport:
    """Full report with exact ``a`` and ``b``."""
    _check_positive(n)
    p = sphere_prime(n)
    if not is_prime(p):
        return CriterionReport(n, p, False, None, None, None, Verdict.COMPOSITE_P)
    b = multiplicative_order(4, p, factorize_p_minus_1(n))
    a = subgroup_dlog(-(4 * n + 2) % p, 4, b, p)
    if a is None:
        a = INFINITE
    solution = solve_equation(n, a, b)
    return CriterionReport(n, p, True, a, b, solution, _verdict(True, solution))


def check_n_fast(n: int, p_is_prime: bool | None = None) -> CriterionReport:
    """Same verdict as :func:`check_n` with O(n) multiplications mod p.

    A solution needs ``a(x+1) <= n``, so ``a <= n``. If ``b > n`` then
    ``b y <= n - 1 < b`` forces ``y = 0``. Scanning ``4^k`` for ``k = 1..n``
    and recording the first hits of ``-(4n+2)`` and of 1 therefore decides
    solvability; exponents not hit are reported as ``GT_N``. Once ``b`` is
    hit the powers cycle, so a missing ``a`` at that point is ``> n`` as well.
    """
    _check_positive(n)
    p = sphere_prime(n)
    if p_is_prime is None:
        p_is_prime = is_prime(p)
    if not p_is_prime:
        return CriterionReport(n, p, False, None, None, None, Verdict.COMPOSITE_P)
    target = -(4 * n + 2) % p
    a = b = GT_N
    v = 1
    for k in range(1, n + 1):
        v = v * 4 % p
        if v == target and a == GT_N:
            a = k
        if v == 1:
            b = k
            break
    solution = solve_equation(n, a, b)
    return CriterionReport(n, p, True, a, b, solution, _verdict(True, solution))


def x_set_member(k: int, a, b: int) -> bool:
    """Whether ``k`` lies in ``{a x + b y : x >= 1, y >= 0}``; infinite ``a`` gives False."""
    if b < 1:
        raise ValueError("b must be positive")
    if not isinstance(a, int):
        return False
    return solve_equation(k, a, b) is not None


def _scan_chunk(args):
    lo, hi, want_reports = args
    primes, applicable, reports = [], [], []
    for n in range(lo, hi):
        p = sphere_prime(n)
        if is_prime(p):
            rep = check_n_fast(n, p_is_prime=True)
            primes.append(n)
            if rep.verdict is Verdict.NONEXISTENCE_PROVEN:
                applicable.append(n)
        else:
            rep = CriterionReport(n, p, False, None, None, None, Verdict.COMPOSITE_P)
        if want_reports:
            reports.append(rep)
    return primes, applicable, reports


def _chunks(x_max, workers):
    size = max(1, x_max // (8 * workers))
    bounds, lo = [], 1
    while lo <= x_max:
        hi = min(x_max + 1, lo + size)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def scan(x_max: int, thresholds=None, workers: int = 1, report_sink=None) -> ScanTable:
    """Count prime-``p`` and criterion-applicable ``n <= t`` for each threshold ``t``.

    ``report_sink``, if given, is called with every per-n report in increasing
    ``n`` regardless of ``workers``.
    """
    _check_positive(x_max)
    if thresholds is None:
        thresholds = [x_max]
    thresholds = list(thresholds)
    if thresholds != sorted(thresholds) or len(set(thresholds)) != len(thresholds):
        raise ValueError("thresholds must be strictly increasing")
    if thresholds and (thresholds[0] < 1 or thresholds[-1] > x_max):
        raise ValueError("thresholds must lie in [1, x_max]")
    if workers < 1:
        raise ValueError("workers must be >= 1")

    want = report_sink is not None
    tasks = [(lo, hi, want) for lo, hi in _chunks(x_max, workers)]
    if workers == 1:
        results = map(_scan_chunk, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_scan_chunk, tasks)

    prime_ns, applicable_ns = [], []
    try:
        for primes, applicable, reports in results:
            prime_ns += primes
            applicable_ns += applicable
            for rep in reports:
                report_sink(rep)
    finally:
        if workers > 1:
            pool.shutdown()

    table = ScanTable(thresholds=thresholds)
    for t in thresholds:
        table.prime_counts.append(bisect.bisect_right(prime_ns, t))
        table.applicable_counts.append(bisect.bisect_right(applicable_ns, t))
    return table
