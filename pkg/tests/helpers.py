"""Shared random generators and independent oracles for the test suite."""

from fractions import Fraction

from semidegree import DPuiseuxPoly, GenericDPS, LaurentPoly


def random_dps(rng, max_terms=3, denominators=(1, 1, 2, 3)):
    """A random descending Puiseux polynomial with small denominators."""
    terms = []
    used = set()
    for _ in range(rng.randrange(0, max_terms + 1)):
        e = Fraction(rng.randrange(-6, 7), rng.choice(denominators))
        if e in used:
            continue
        used.add(e)
        terms.append((e, Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))))
    return DPuiseuxPoly(terms)


def random_generic(rng, max_terms=3):
    """A random generic descending series (any sign of the last value)."""
    phi = random_dps(rng, max_terms=max_terms)
    bottom = phi.order if not phi.is_zero else Fraction(3)
    r = bottom - Fraction(rng.randrange(1, 6), rng.choice([1, 2, 3]))
    return GenericDPS(phi, r)


def random_contractible(rng, max_terms=3):
    """A random generic series whose last essential value is positive."""
    from semidegree import essential_key_values, formal_pairs

    while True:
        g = random_generic(rng, max_terms=max_terms)
        if essential_key_values(formal_pairs(g))[-1] > 0:
            return g


def random_laurent(rng, max_terms=4, allow_negative_x=True):
    """A random nonzero element of Q[x, 1/x, y] with a small support."""
    while True:
        terms = []
        low = -3 if allow_negative_x else 0
        for _ in range(rng.randrange(1, max_terms + 1)):
            a = rng.randrange(low, 5)
            b = rng.randrange(0, 4)
            c = Fraction(rng.choice([-5, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))
            terms.append(((a, b), c))
        poly = LaurentPoly(terms)
        if not poly.is_zero:
            return poly


def coprime_pairs(rng, count, min_q=2, max_p=12):
    """Distinct coprime (p, q) with p > q >= min_q."""
    import math

    seen = set()
    out = []
    while len(out) < count:
        p = rng.randrange(min_q + 1, max_p + 1)
        q = rng.randrange(min_q, p)
        if math.gcd(p, q) == 1 and (p, q) not in seen:
            seen.add((p, q))
            out.append((p, q))
    return out


def random_normal_pairs(rng):
    """Random pair list in normal form; the last value may have either sign."""
    import math

    from semidegree import FormalPuiseuxPairs

    l = rng.randrange(0, 3)
    if l == 0:
        while True:
            p1 = rng.randrange(2, 8)
            q1 = rng.randrange(-6, p1)
            if math.gcd(abs(q1), p1) == 1:
                return FormalPuiseuxPairs(((q1, p1),))
    pairs = []
    while True:
        p1 = rng.randrange(3, 6)
        q1 = rng.randrange(2, p1)
        if math.gcd(q1, p1) == 1:
            pairs = [(q1, p1)]
            break
    for _ in range(l - 1):
        while True:
            p = rng.randrange(2, 4)
            q = pairs[-1][0] * p - rng.randrange(1, 15)
            if math.gcd(abs(q), p) == 1:
                pairs.append((q, p))
                break
    while True:
        p = rng.randrange(1, 4)
        q = pairs[-1][0] * p - rng.randrange(1, 15)
        if math.gcd(abs(q), p) == 1:
            pairs.append((q, p))
            break
    return FormalPuiseuxPairs(tuple(pairs))
