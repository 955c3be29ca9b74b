"""Slow, obviously-correct reference computations used only by the tests."""

import itertools
import math


def is_prime_trial(v):
    if v < 2:
        return False
    return all(v % d for d in range(2, math.isqrt(v) + 1))


def prime_sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(flags[i * i::i]))
    return flags


def order_loop(g, p):
    v, k = g % p, 1
    while v != 1:
        v = v * g % p
        k += 1
    return k


def dlog_loop(target, g, p):
    """Least k >= 1 with g^k == target, scanning one full period; None if absent."""
    period = order_loop(g, p)
    v = 1
    for k in range(1, period + 1):
        v = v * g % p
        if v == target % p:
            return k
    return None


def box_sphere_count(n, e):
    return sum(1 for x in itertools.product(range(-e, e + 1), repeat=n) if sum(map(abs, x)) <= e)


def coverage_counts(centers, n, e, q):
    """Coverage of every torus point by distance computation, no offsets table."""
    counts = {}
    for pt in itertools.product(range(q), repeat=n):
        c = 0
        for ctr in centers:
            d = sum(min(abs(a - b), q - abs(a - b)) for a, b in zip(pt, ctr))
            c += d <= e
        counts[pt] = c
    return counts


def elementary_direct(values, k, p):
    return sum(math.prod(c) for c in itertools.combinations(values, k)) % p


def partition_witnesses(n):
    """All x in ((Z/pZ)^*)^n whose sphere images are pairwise distinct: plain loops."""
    p = 2 * n * n + 2 * n + 1
    out = []
    for x in itertools.product(range(1, p), repeat=n):
        vals = [0]
        for i in range(n):
            vals += [x[i], -x[i], 2 * x[i], -2 * x[i]]
            for j in range(i):
                vals += [x[i] + x[j], x[i] - x[j], x[j] - x[i], -x[i] - x[j]]
        if len({v % p for v in vals}) == len(vals) == p:
            out.append(x)
    return out
