"""Key forms of a semidegree and their combinatorial shadow.

The key forms of a semidegree with positive value on x are a finite
sequence g_0 = x, g_1 = y, ..., g_{n+1} in Q[x, 1/x, y] that pins the
semidegree down completely.  :func:`compute_key_forms` builds them from the
generic descending Puiseux series by repeatedly cancelling the leading term
of the current form's expansion:

* while the leading coefficient of the expansion is a constant, the leading
  term equals a monomial in the earlier *essential* forms (with exponents
  reduced below the multipliers), and subtracting a suitable scalar multiple
  of that monomial produces the next form;
* when the leading x-degree leaves the lattice spanned so far, the current
  form is first raised to the next denominator before subtracting (this is
  where a new essential form is born);
* the process stops as soon as the generic indeterminate reaches the
  leading coefficient.

The values of the essential forms depend only on the formal Puiseux pairs
and satisfy an explicit recursion (:func:`essential_key_values`), which the
algorithm cross-checks on every run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import LaurentPoly, XiSeries, monomial_product, semidegree, series_of
from .puiseux import FormalPuiseuxPairs, GenericDPS, formal_pairs
from .semigroups import in_group


class KeyFormError(ValueError):
    """A precondition failed or an internal consistency check fired."""


@dataclass(frozen=True)
class KeyFormSeq:
    """The forms g_0..g_{n+1} with their values, multipliers and essentials.

    ``multipliers[j - 1]`` is the least positive integer taking values[j]
    into the group generated by the earlier values, for 1 <= j <= n+1.
    ``essential_indices`` lists 0, the positions with multiplier > 1 among
    1..n, and n+1.
    """

    forms: tuple[LaurentPoly, ...]
    values: tuple[int, ...]
    multipliers: tuple[int, ...]
    essential_indices: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.forms) - 2

    def alpha(self, j: int) -> int:
        if not 1 <= j <= self.n + 1:
            raise IndexError(f"multiplier index {j} out of range")
        return self.multipliers[j - 1]

    @property
    def last_form(self) -> LaurentPoly:
        return self.forms[-1]

    @property
    def last_value(self) -> int:
        return self.values[-1]

    def essential_values(self) -> tuple[int, ...]:
        return tuple(self.values[j] for j in self.essential_indices)


def last_value(seq: KeyFormSeq) -> int:
    return seq.last_value


def essential_values_of(seq: KeyFormSeq) -> tuple[int, ...]:
    return seq.essential_values()


def essential_key_values(pairs: FormalPuiseuxPairs) -> tuple[int, ...]:
    """Values of the essential forms, from the pairs alone.

    With p_0 = q_0 = 1: the zeroth value is the full denominator product,
    and each later one is p_{k-1} * previous + (q_k - q_{k-1} p_k) * (tail
    denominator product).
    """
    ps = [1] + [p for _, p in pairs.pairs]
    qs = [1] + [q for q, _ in pairs.pairs]
    tail = [1] * (len(ps) + 1)
    for i in range(len(ps) - 1, 0, -1):
        tail[i] = tail[i + 1] * ps[i]
    omegas = [tail[1]]
    for k in range(1, len(ps)):
        omegas.append(ps[k - 1] * omegas[k - 1] + (qs[k] - qs[k - 1] * ps[k]) * tail[k + 1])
    return tuple(omegas)


def pairs_from_essential_values(omegas: Sequence[int]) -> FormalPuiseuxPairs:
    """Invert :func:`essential_key_values`.

    The p_k fall out of the chain of gcds of value prefixes, and the q_k
    then follow from the recursion.
    """
    gcds = []
    g = 0
    for w in omegas:
        g = math.gcd(g, w)
        gcds.append(g)
    if gcds[-1] != 1:
        raise KeyFormError("essential values must have trivial overall gcd")
    ps = [gcds[k - 1] // gcds[k] for k in range(1, len(omegas))]
    qs = []
    q_prev, p_prev = 1, 1
    for k in range(1, len(omegas)):
        diff = omegas[k] - p_prev * omegas[k - 1]
        if diff % gcds[k] != 0:
            raise KeyFormError("values do not satisfy the essential recursion")
        q = q_prev * ps[k - 1] + diff // gcds[k]
        qs.append(q)
        q_prev, p_prev = q, ps[k - 1]
    return FormalPuiseuxPairs(tuple(zip(qs, ps)))


def represent(target, values: Sequence[Fraction], bounds: Sequence[int]) -> list[int]:
    """The unique combination sum(beta_i * values[i]) == target with
    0 <= beta_i < bounds[i - 1] for i >= 1 and beta_0 an arbitrary integer.

    Solved from the top down: at each position the residue is the single
    one putting the remainder into the group spanned by the lower values.
    Uniqueness holds because each bound is the least multiplier taking its
    value into that group.
    """
    if len(bounds) != len(values) - 1:
        raise KeyFormError("need one bound per value beyond the first")
    remaining = Fraction(target)
    beta = [0] * len(values)
    for i in range(len(values) - 1, 0, -1):
        lower = values[:i]
        found = None
        for residue in range(bounds[i - 1]):
            if in_group(remaining - residue * values[i], lower):
                found = residue
                break
        if found is None:
            raise KeyFormError(f"{target} is not representable in the given values")
        beta[i] = found
        remaining -= found * values[i]
    quotient = remaining / values[0]
    if quotient.denominator != 1:
        raise KeyFormError(f"{target} is not representable in the given values")
    beta[0] = int(quotient)
    return beta


def _xi_degree(poly) -> int:
    return len(poly) - 1


def compute_key_forms(g: GenericDPS, max_steps: int | None = None) -> KeyFormSeq:
    """Run the cancellation algorithm on a generic descending series."""
    pairs = formal_pairs(g)
    ps = [p for _, p in pairs.pairs]
    delta_x = pairs.delta_x

    if max_steps is None:
        max_steps = 10 * (len(g.phi) + sum(ps))

    x = LaurentPoly.x()
    forms: list[LaurentPoly] = [x, LaurentPoly.y()]
    expansions: list[XiSeries] = [XiSeries.monomial(Fraction(1), 1), series_of(g)]
    # essential bookkeeping: indices, forms, expansions, and x-degrees
    ess_indices = [0]
    ess_forms = [x]
    ess_expansions = [expansions[0]]
    ess_degrees = [Fraction(1)]
    lattice = 1  # p_0 * ... * p_k for the essentials found so far

    degrees = [Fraction(1)]
    steps = 0
    while True:
        steps += 1
        if steps > max_steps:
            raise KeyFormError(
                "cancellation did not terminate within the step cap; this is a bug"
            )
        s = len(forms) - 1
        expansion = expansions[s]
        if expansion.is_zero:
            raise KeyFormError("expansion vanished; this is a bug")
        w = expansion.degree
        degrees.append(w)
        lead = expansion.leading_coefficient

        if _xi_degree(lead) >= 1:
            ess_indices.append(s)
            break

        constant = lead[0]
        k = len(ess_indices) - 1
        if (w * lattice).denominator == 1:
            # cancel within the current lattice
            beta = represent(w, ess_degrees, ps[:k])
            target_degree = w
            power = 1
        else:
            # leading degree needs the next denominator: new essential form
            if k >= len(ps):
                raise KeyFormError("degree outside the full lattice; this is a bug")
            p_next = ps[k]
            if (w * lattice * p_next).denominator != 1:
                raise KeyFormError("degree skipped a lattice level; this is a bug")
            beta = represent(p_next * w, ess_degrees, ps[:k])
            target_degree = p_next * w
            power = p_next

        monomial = monomial_product(ess_forms, beta)
        mono_expansion = XiSeries.monomial(Fraction(1), 0)
        for ess_exp, b in zip(ess_expansions, beta):
            if b < 0:
                mono_expansion = mono_expansion.scaled_shift(Fraction(1), b)
            else:
                mono_expansion = mono_expansion * ess_exp ** b
        mono_lead = mono_expansion.leading_coefficient
        if mono_expansion.degree != target_degree or _xi_degree(mono_lead) != 0:
            raise KeyFormError("cancelling monomial has the wrong shape; this is a bug")

        scalar = constant ** power / mono_lead[0]
        if power == 1:
            forms.append(forms[s] - monomial.scale(scalar))
            expansions.append(expansion - mono_expansion.scaled_shift(scalar, 0))
        else:
            ess_indices.append(s)
            ess_forms.append(forms[s])
            ess_expansions.append(expansion)
            ess_degrees.append(w)
            lattice *= power
            forms.append(forms[s] ** power - monomial.scale(scalar))
            expansions.append(expansion ** power - mono_expansion.scaled_shift(scalar, 0))

    values = []
    for w in degrees:
        v = delta_x * w
        if v.denominator != 1:
            raise KeyFormError("value is not an integer; this is a bug")
        values.append(int(v))

    multipliers = _multipliers_from_values(values)
    seq = KeyFormSeq(tuple(forms), tuple(values), tuple(multipliers), tuple(ess_indices))
    _check_run(seq, pairs)
    return seq


def _multipliers_from_values(values: Sequence[int]) -> list[int]:
    """alpha_j = least positive integer with alpha_j * values[j] in the group
    of the earlier values, computed through the running gcd."""
    out = []
    g = 0
    for j, v in enumerate(values):
        if j > 0:
            out.append(g // math.gcd(g, abs(v)) if v != 0 else 1)
        g = math.gcd(g, abs(v))
    return out


def _check_run(seq: KeyFormSeq, pairs: FormalPuiseuxPairs) -> None:
    """Internal cross-checks the construction is entitled to."""
    ps = [p for _, p in pairs.pairs]
    if len(seq.essential_indices) != pairs.l + 2:
        raise KeyFormError("wrong number of essential forms; this is a bug")
    if seq.essential_values() != essential_key_values(pairs):
        raise KeyFormError("essential values disagree with the recursion; this is a bug")
    for k, j in enumerate(seq.essential_indices[1:], start=1):
        if seq.alpha(j) != ps[k - 1]:
            raise KeyFormError("essential multiplier mismatch; this is a bug")
    for j in range(1, seq.n + 2):
        if j not in seq.essential_indices and seq.alpha(j) != 1:
            raise KeyFormError("non-essential index with multiplier > 1; this is a bug")


@dataclass(frozen=True)
class VerificationReport:
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


def verify_key_properties(seq: KeyFormSeq, g: GenericDPS | None = None) -> VerificationReport:
    """Re-check the defining properties of a key-form sequence from scratch.

    Checks the endpoint forms, the multiplier minimality and value drop, and
    that each consecutive pair differs by a scalar multiple of a monomial in
    the earlier forms with reduced exponents and matching value.  With a
    generic series supplied, each recorded value is also recomputed through
    an independent substitution.  The minimality property quantifying over
    all preimages is certified by these checks together rather than tested
    directly.
    """
    problems: list[str] = []
    forms, values = seq.forms, seq.values
    n = seq.n

    if forms[0] != LaurentPoly.x():
        problems.append("form 0 is not x")
    if len(forms) < 2 or forms[1] != LaurentPoly.y():
        problems.append("form 1 is not y")

    if g is not None:
        for j, form in enumerate(forms):
            actual = semidegree(form, g)
            if actual != values[j]:
                problems.append(f"value {j}: recorded {values[j]}, substitution gives {actual}")

    for j, form in enumerate(forms[1:], start=1):
        if not form.is_monic_in_y():
            problems.append(f"form {j} is not monic in y")

    # multipliers: direct minimal search against the recorded values
    for j in range(1, n + 2):
        earlier = values[:j]
        alpha = None
        for candidate in range(1, seq.alpha(j) + 1):
            if in_group(candidate * values[j], earlier):
                alpha = candidate
                break
        if alpha != seq.alpha(j):
            problems.append(f"multiplier {j}: recorded {seq.alpha(j)}, minimal is {alpha}")

    for j in range(1, n + 1):
        if not values[j + 1] < seq.alpha(j) * values[j]:
            problems.append(f"value {j + 1} does not drop below multiplier * value {j}")

    # each step is: previous form to its multiplier, minus a scaled monomial
    for j in range(1, n + 1):
        difference = forms[j] ** seq.alpha(j) - forms[j + 1]
        if difference.is_zero:
            problems.append(f"step {j}: no monomial was subtracted")
            continue
        try:
            beta = represent(
                seq.alpha(j) * values[j],
                [Fraction(v) for v in values[:j]],
                list(seq.multipliers[: j - 1]),
            )
        except KeyFormError as exc:
            problems.append(f"step {j}: {exc}")
            continue
        monomial = monomial_product(list(forms[:j]), beta)
        key, lead = difference.leading_term()
        mono_coeff = monomial.coefficient(*key)
        if mono_coeff == 0 or difference != monomial.scale(lead / mono_coeff):
            problems.append(f"step {j}: difference is not a scalar multiple of the expected monomial")

    # essential bookkeeping
    ess = seq.essential_indices
    if not ess or ess[0] != 0 or ess[-1] != n + 1:
        problems.append("essential indices must start at 0 and end at the last form")
    if list(ess) != sorted(set(ess)):
        problems.append("essential indices must strictly increase")
    for j in range(1, n + 1):
        if (seq.alpha(j) > 1) != (j in ess):
            problems.append(f"index {j}: essentiality disagrees with multiplier {seq.alpha(j)}")

    expected_y_degree = 1
    for j in ess[1:]:
        if not forms[j].is_zero and forms[j].y_degree != expected_y_degree:
            problems.append(f"essential form {j}: y-degree {forms[j].y_degree} != {expected_y_degree}")
        if j <= n:
            expected_y_degree *= seq.alpha(j)

    return VerificationReport(tuple(problems))
