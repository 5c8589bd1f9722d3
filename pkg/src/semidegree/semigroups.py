"""Membership tests for subgroups and numerical semigroups of the rationals.

The group generated by finitely many rationals is cyclic, so group
membership reduces to a gcd divisibility check.  Semigroup membership (only
nonnegative combinations allowed) is the coin problem and is decided by
dynamic programming; the generators must be positive integers, which every
caller in this package guarantees before asking.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def rational_gcd(values: Sequence[Fraction]) -> Fraction:
    """Positive generator of the group sum(Z * v for v in values); 0 if trivial.

    Over the common denominator L the group is spanned by integers, so it is
    gcd(numerators)/L.
    """
    fracs = [Fraction(v) for v in values if v != 0]
    if not fracs:
        return Fraction(0)
    common = 1
    for f in fracs:
        common = common * f.denominator // math.gcd(common, f.denominator)
    g = 0
    for f in fracs:
        g = math.gcd(g, abs(f.numerator) * (common // f.denominator))
    return Fraction(g, common)


def in_group(target, generators: Sequence[Fraction]) -> bool:
    """True iff target is an integer combination of the generators."""
    t = Fraction(target)
    if t == 0:
        return True
    g = rational_gcd(generators)
    if g == 0:
        return False
    return (t / g).denominator == 1


def in_semigroup(target: int, generators: Sequence[int]) -> bool:
    """True iff target is a nonnegative integer combination of the generators.

    Generators must be positive integers.
    """
    for g in generators:
        if g <= 0:
            raise ValueError(f"semigroup generators must be positive, got {g}")
    if target < 0:
        return False
    reachable = [False] * (target + 1)
    reachable[0] = True
    for g in generators:
        for v in range(g, target + 1):
            if reachable[v - g]:
                reachable[v] = True
    return reachable[target]
