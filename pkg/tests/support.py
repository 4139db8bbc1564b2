"""Shared test helpers: independent oracles and a seeded spec generator.

Everything in here is deliberately written from scratch (plain loops over
``fractions.Fraction``) so that tests never validate the library against
its own internals.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from piseries import SeriesSpec, build_spec


def naive_poch(z: Fraction, n: int) -> Fraction:
    """Rising factorial by bare loop; the reference the fast path must match."""
    z = Fraction(z)
    if n >= 0:
        out = Fraction(1)
        for k in range(n):
            out *= z + k
        return out
    out = Fraction(1)
    for k in range(1, -n + 1):
        out /= z - k
    return out


def naive_term(alpha: Fraction, a: int, b: int, c: int, n: int) -> Fraction:
    num = naive_poch(alpha, a + n) * naive_poch(1 - alpha, b + n)
    return num / (math.factorial(n) * math.factorial(c + n))


def naive_partial(spec: SeriesSpec, count: int) -> Fraction:
    """Term-by-term partial sum; O(count^2)-ish, keep count modest."""
    total = Fraction(0)
    for n in range(count):
        total += naive_term(spec.alpha, spec.a, spec.b, spec.c, n)
    return total


def random_spec(rng: random.Random) -> SeriesSpec:
    """Uniform-ish draw over the supported parameter box.

    q in 2..12 with p coprime so alpha is always in lowest terms; c is drawn
    high enough that the convergence constraint c - a - b >= 1 always holds.
    """
    while True:
        q = rng.randint(2, 12)
        p = rng.randint(1, q - 1)
        if math.gcd(p, q) == 1:
            break
    a = rng.randint(-3, 3)
    b = rng.randint(-3, 3)
    c = rng.randint(max(0, a + b + 1), 8)
    return build_spec(Fraction(p, q), a, b, c)


def random_specs(seed: int, count: int) -> list[SeriesSpec]:
    rng = random.Random(seed)
    return [random_spec(rng) for _ in range(count)]
