"""Exact modular arithmetic, primality, factorization, orders and discrete logs.

Python integers are unbounded, so products never overflow; the helpers below
still reduce every result to a canonical residue in ``[0, m)``.
"""

from __future__ import annotations

import math
import random

__all__ = [
    "mul_mod",
    "pow_mod",
    "is_prime",
    "factorize",
    "factorize_p_minus_1",
    "multiplicative_order",
    "subgroup_dlog",
]

# Deterministic Miller-Rabin bases: the first twelve primes are a complete
# witness set for every v < 3.317e24 (Sorenson & Webster, "Strong pseudoprimes
# to twelve prime bases", Math. Comp. 86 (2017)), which covers the 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10**6


def _check_modulus(m):
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")


def mul_mod(a: int, b: int, m: int) -> int:
    _check_modulus(m)
    return (a * b) % m


def pow_mod(base: int, exp: int, m: int) -> int:
    """Return ``base**exp mod m`` by binary exponentiation (``exp >= 0``)."""
    _check_modulus(m)
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    result = 1 % m
    base %= m
    while exp:
        if exp & 1:
            result = result * base % m
        base = base * base % m
        exp >>= 1
    return result


def is_prime(v: int) -> bool:
    if v < 2:
        return False
    for q in _MR_BASES:
        if v % q == 0:
            return v == q
    d, s = v - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, v)
        if x == 1 or x == v - 1:
            continue
        for _ in range(s - 1):
            x = x * x % v
            if x == v - 1:
                break
        else:
            return False
    return True


def _pollard_brent(v, rng):
    # v is odd, composite and not a perfect power of a tiny prime.
    while True:
        y, c, m = rng.randrange(1, v), rng.randrange(1, v), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % v
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % v
                    q = q * abs(x - y) % v
                g = math.gcd(q, v)
                k += m
            r *= 2
        if g == v:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % v
                g = math.gcd(abs(x - ys), v)
        if g != v:
            return g


def _merge(into, other):
    for prime, exp in other.items():
        into[prime] = into.get(prime, 0) + exp
    return into


def factorize(v: int) -> dict[int, int]:
    """Complete prime factorization of ``v >= 2`` as an ordered ``{prime: exponent}``.

    Trial division up to 10**6, then Pollard-Brent splitting of any remaining
    cofactor. Fast for the inputs this package produces; not meant for
    adversarial 64-bit semiprimes.
    """
    if v < 2:
        raise ValueError(f"cannot factor {v}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= v and d <= _TRIAL_LIMIT:
        while v % d == 0:
            factors[d] = factors.get(d, 0) + 1
            v //= d
        d += 1 if d == 2 else 2
    if v > 1:
        stack = [v]
        rng = random.Random(v)  # seeded so results never depend on global state
        while stack:
            w = stack.pop()
            if is_prime(w):
                factors[w] = factors.get(w, 0) + 1
                continue
            r = math.isqrt(w)
            if r * r == w:
                stack += [r, r]
                continue
            f = _pollard_brent(w, rng)
            stack += [f, w // f]
    return dict(sorted(factors.items()))


def factorize_p_minus_1(n: int) -> dict[int, int]:
    """Factor ``p - 1`` for ``p = 2n^2 + 2n + 1`` using ``p - 1 = 2 n (n + 1)``.

    Only ``n`` and ``n + 1`` are ever trial-divided, never ``p - 1`` itself.
    """
    if n < 1:
        raise ValueError("n must be positive")
    factors = {2: 1}
    _merge(factors, factorize(n) if n > 1 else {})
    _merge(factors, factorize(n + 1))
    return dict(sorted(factors.items()))


def multiplicative_order(g: int, p: int, fact_of_p_minus_1: dict[int, int] | None = None) -> int:
    """Least ``b >= 1`` with ``g**b == 1 (mod p)`` for prime ``p``.

    Starts from ``p - 1`` and strips prime factors while the power stays 1.
    """
    _check_modulus(p)
    g %= p
    if g == 0:
        raise ValueError("g is divisible by p and has no multiplicative order")
    if fact_of_p_minus_1 is None:
        fact_of_p_minus_1 = factorize(p - 1) if p > 2 else {}
    order = p - 1
    for prime, exp in fact_of_p_minus_1.items():
        for _ in range(exp):
            if pow(g, order // prime, p) == 1:
                order //= prime
            else:
                break
    return order


def subgroup_dlog(target: int, g: int, order_of_g: int, p: int) -> int | None:
    """Least ``k >= 1`` with ``g**k == target (mod p)``, or None if target is not in <g>.

    Baby-step giant-step over the cyclic subgroup of size ``order_of_g``,
    O(sqrt(order)) time and memory. ``target == 1`` yields ``order_of_g``.
    """
    _check_modulus(p)
    target %= p
    g %= p
    if target == 0:
        return None
    m = math.isqrt(order_of_g - 1) + 1 if order_of_g > 1 else 1
    baby = {}
    v = 1
    for j in range(m):
        baby.setdefault(v, j)
        v = v * g % p
    # g^-m, computed inside the subgroup to avoid a modular inverse
    giant = pow(g, (order_of_g - m) % order_of_g, p)
    gamma = target
    for i in range(m):
        j = baby.get(gamma)
        if j is not None:
            k = i * m + j
            return k if k > 0 else order_of_g
        gamma = gamma * giant % p
    return None
