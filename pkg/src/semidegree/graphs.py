"""Resolution dual graphs and their classification by semigroup conditions.

Every valid pair list in normal form determines a weighted marked tree: a
horizontal spine of Hirzebruch-Jung chains with one downward branch per
pair, one vertex marked L (the line at infinity) and one marked E* (the
curve that survives contraction).  The graph corresponds to an actual
compactification exactly when the last essential value is positive, and
then two families of semigroup conditions on the essential values decide
whether the compactifications it carries are algebraic, non-algebraic, or
both.  Explicit witness key-form sequences are constructed for each
non-trivial answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LaurentPoly, monomial_product
from .decide import NotACompactificationError
from .keyforms import KeyFormSeq, essential_key_values, represent
from .puiseux import FormalPuiseuxPairs
from .semigroups import in_group, in_semigroup

MARK_LINE = "L"
MARK_ESTAR = "Estar"

ALGEBRAIC_ONLY = "algebraic_only"
NON_ALGEBRAIC_ONLY = "non_algebraic_only"
BOTH = "both"
NOT_A_COMPACTIFICATION = "not_a_compactification"


class GraphError(ValueError):
    pass


class NormalFormError(GraphError):
    """The pair list is not in the normal form the graph shapes assume."""


class WitnessError(GraphError):
    """The requested witness kind is ruled out by the classification."""


@dataclass(frozen=True)
class Vertex:
    name: str
    weight: int
    mark: str | None = None


@dataclass(frozen=True)
class DualGraph:
    """Weighted marked tree; vertices keep construction order."""

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[str, str], ...]

    def vertex(self, name: str) -> Vertex:
        for v in self.vertices:
            if v.name == name:
                return v
        raise KeyError(name)

    def weights(self) -> dict[str, int]:
        return {v.name: v.weight for v in self.vertices}

    def marked(self, mark: str) -> Vertex:
        found = [v for v in self.vertices if v.mark == mark]
        if len(found) != 1:
            raise GraphError(f"expected exactly one vertex marked {mark}")
        return found[0]


def hj_expansion(a: int, b: int) -> list[int]:
    """Continued fraction a/b = c0 - 1/(c1 - 1/(... - 1/ct)) with cj >= 2
    for j >= 1, by repeated ceiling division."""
    if a <= 0 or b <= 0:
        raise GraphError(f"continued fraction needs positive inputs, got {a}/{b}")
    out = []
    while True:
        c = -(-a // b)
        out.append(c)
        remainder = c * b - a
        if remainder == 0:
            return out
        a, b = b, remainder


def hj_evaluate(entries: list[int]) -> Fraction:
    """Value of the continued fraction c0 - 1/(c1 - 1/(...))."""
    if not entries:
        raise GraphError("empty continued fraction")
    value = Fraction(entries[-1])
    for c in reversed(entries[:-1]):
        value = c - 1 / value
    return value


def is_normal_form(pairs: FormalPuiseuxPairs) -> bool:
    q1, p1 = pairs.pairs[0]
    return q1 < p1 and (pairs.l == 0 or q1 > 1)


def require_normal_form(pairs: FormalPuiseuxPairs) -> None:
    if not is_normal_form(pairs):
        raise NormalFormError("normalize coordinates first")


def candidate_graph(pairs: FormalPuiseuxPairs) -> DualGraph:
    """Build the weighted marked tree for a normal-form pair list.

    This constructs the graph shape regardless of whether it actually
    bounds a compactification; callers wanting the positivity gate use
    :func:`resolution_graph`.
    """
    require_normal_form(pairs)
    ps = [p for _, p in pairs.pairs]
    qs = [q for q, _ in pairs.pairs]
    l = pairs.l

    if ps[-1] > 1:
        blocks, cap_weight, tail = l + 1, -1, 0
    else:
        if l == 0:
            raise GraphError("a single integer pair carries no resolution graph")
        blocks, cap_weight, tail = l, -2, qs[l - 1] - qs[l] - 1

    prefix = 1
    tilde_q: list[int] = []
    for i in range(blocks):
        prefix *= ps[i]
        tilde_q.append(prefix - qs[i])

    u_chains: list[list[int]] = []
    v_chains: list[list[int]] = []
    for i in range(blocks):
        q_prime = tilde_q[0] if i == 0 else tilde_q[i] - tilde_q[i - 1] * ps[i]
        if q_prime <= 0:
            raise GraphError(f"block {i + 1}: nonpositive chain parameter {q_prime}")
        u_chains.append(hj_expansion(ps[i], q_prime))
        v_chains.append(hj_expansion(q_prime, ps[i]))

    vertices: list[Vertex] = []
    edges: list[tuple[str, str]] = []

    def add(name: str, weight: int, attach: str | None, mark: str | None = None) -> str:
        vertices.append(Vertex(name, weight, mark))
        if attach is not None:
            edges.append((attach, name))
        return name

    def hang_branch(block: int, attach: str) -> None:
        # the branch under a spine vertex, top entry adjacent to the spine
        chain = v_chains[block][1:]
        for j in range(len(chain), 0, -1):
            attach = add(f"B{block + 1}V{j}", -chain[j - 1], attach)

    spine = add(MARK_LINE, 1 - u_chains[0][0], None, mark=MARK_LINE)
    for i in range(blocks):
        if i >= 1:
            spine = add(f"B{i + 1}H", -u_chains[i][0] - 1, spine)
            hang_branch(i - 1, spine)
        for j, c in enumerate(u_chains[i][1:], start=1):
            spine = add(f"B{i + 1}T{j}", -c, spine)

    if ps[-1] > 1:
        spine = add(MARK_ESTAR, cap_weight, spine, mark=MARK_ESTAR)
        hang_branch(blocks - 1, spine)
    else:
        spine = add("Cap", cap_weight, spine)
        hang_branch(blocks - 1, spine)
        for j in range(1, tail + 1):
            spine = add(f"S{j}", -2, spine)
        add(MARK_ESTAR, -1, spine, mark=MARK_ESTAR)

    return DualGraph(tuple(vertices), tuple(edges))


def resolution_graph(pairs: FormalPuiseuxPairs) -> DualGraph:
    """The augmented marked dual graph of the minimal resolution; errors when
    the pair list does not correspond to a compactification."""
    omegas = essential_key_values(pairs)
    if omegas[-1] <= 0:
        raise NotACompactificationError(
            f"no compactification: last essential value {omegas[-1]} <= 0"
        )
    return candidate_graph(pairs)


# ---------------------------------------------------------------------------
# intersection matrices


def intersection_matrix(graph: DualGraph, exclude_estar: bool = False) -> list[list[int]]:
    names = [v.name for v in graph.vertices if not (exclude_estar and v.mark == MARK_ESTAR)]
    index = {name: i for i, name in enumerate(names)}
    n = len(names)
    matrix = [[0] * n for _ in range(n)]
    for v in graph.vertices:
        if v.name in index:
            matrix[index[v.name]][index[v.name]] = v.weight
    for a, b in graph.edges:
        if a in index and b in index:
            matrix[index[a]][index[b]] = 1
            matrix[index[b]][index[a]] = 1
    return matrix


def _determinant(matrix: list[list[int]]) -> int:
    """Bareiss fraction-free elimination; exact for integer matrices."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if m[r][i] != 0), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[-1][-1]


def is_negative_definite(matrix: list[list[int]]) -> bool:
    """Sign test on leading principal minors: (-1)^k det_k > 0 for all k."""
    for k in range(1, len(matrix) + 1):
        minor = _determinant([row[:k] for row in matrix[:k]])
        if (-1) ** k * minor <= 0:
            return False
    return True


# ---------------------------------------------------------------------------
# semigroup conditions and classification


def _check_condition_args(omegas, pairs: FormalPuiseuxPairs, k: int) -> None:
    if not 1 <= k <= pairs.l:
        raise GraphError(f"condition index {k} out of range 1..{pairs.l}")
    if any(w <= 0 for w in omegas):
        raise GraphError("semigroup conditions need positive essential values")


def s1(omegas, pairs: FormalPuiseuxPairs, k: int) -> bool:
    """Is p_k * omega_k a nonnegative combination of the earlier values?"""
    _check_condition_args(omegas, pairs, k)
    p_k = pairs.pairs[k - 1][1]
    return in_semigroup(p_k * omegas[k], list(omegas[:k]))


def s2(omegas, pairs: FormalPuiseuxPairs, k: int) -> tuple[bool, int | None]:
    """Between omega_{k+1} and p_k * omega_k, does group membership in the
    first k+1 values imply semigroup membership?  Returns the least
    violating integer when not."""
    _check_condition_args(omegas, pairs, k)
    p_k = pairs.pairs[k - 1][1]
    generators = list(omegas[: k + 1])
    for t in range(omegas[k + 1] + 1, p_k * omegas[k]):
        if in_group(t, [Fraction(w) for w in generators]) and not in_semigroup(t, generators):
            return False, t
    return True, None


@dataclass(frozen=True)
class GraphClass:
    kind: str
    s1_failures: tuple[int, ...] = ()
    s2_failures: tuple[int, ...] = ()
    s2_witnesses: tuple[tuple[int, int], ...] = ()
    essential_values: tuple[int, ...] = ()


def classify(pairs: FormalPuiseuxPairs) -> GraphClass:
    """Sort a normal-form pair list into the four classification kinds."""
    require_normal_form(pairs)
    omegas = essential_key_values(pairs)
    if omegas[-1] <= 0:
        return GraphClass(NOT_A_COMPACTIFICATION, essential_values=omegas)
    s1_failures = []
    s2_failures = []
    s2_witnesses = []
    for k in range(1, pairs.l + 1):
        if not s1(omegas, pairs, k):
            s1_failures.append(k)
        holds, witness = s2(omegas, pairs, k)
        if not holds:
            s2_failures.append(k)
            s2_witnesses.append((k, witness))
    if s1_failures:
        kind = NON_ALGEBRAIC_ONLY
    elif s2_failures:
        kind = BOTH
    else:
        kind = ALGEBRAIC_ONLY
    return GraphClass(
        kind,
        tuple(s1_failures),
        tuple(s2_failures),
        tuple(s2_witnesses),
        omegas,
    )


# ---------------------------------------------------------------------------
# witness key-form sequences


def _base_witness_forms(pairs: FormalPuiseuxPairs, omegas) -> list[LaurentPoly]:
    """x, y, then each next form is the previous one raised to its p and
    reduced by the canonical monomial of the same value."""
    ps = [p for _, p in pairs.pairs]
    forms = [LaurentPoly.x(), LaurentPoly.y()]
    for k in range(1, pairs.l + 1):
        beta = represent(ps[k - 1] * omegas[k], [Fraction(w) for w in omegas[:k]], ps[: k - 1])
        forms.append(forms[k] ** ps[k - 1] - monomial_product(forms[:k], beta))
    return forms


def algebraic_witness(pairs: FormalPuiseuxPairs) -> KeyFormSeq:
    """A key-form sequence, every form a polynomial, realizing the graph."""
    omegas = essential_key_values(pairs)
    if omegas[-1] <= 0:
        raise NotACompactificationError(
            f"no compactification: last essential value {omegas[-1]} <= 0"
        )
    for k in range(1, pairs.l + 1):
        if not s1(omegas, pairs, k):
            raise WitnessError(f"no algebraic witness: first semigroup condition fails at k={k}")
    forms = _base_witness_forms(pairs, omegas)
    ps = tuple(p for _, p in pairs.pairs)
    return KeyFormSeq(tuple(forms), omegas, ps, tuple(range(pairs.l + 2)))


def nonalgebraic_witness(pairs: FormalPuiseuxPairs) -> KeyFormSeq:
    """A key-form sequence with a non-polynomial form realizing the graph."""
    omegas = essential_key_values(pairs)
    if omegas[-1] <= 0:
        raise NotACompactificationError(
            f"no compactification: last essential value {omegas[-1]} <= 0"
        )
    ps = [p for _, p in pairs.pairs]
    s1_fail = [k for k in range(1, pairs.l + 1) if not s1(omegas, pairs, k)]
    if s1_fail:
        # the base sequence itself is non-polynomial from the failure onward
        forms = _base_witness_forms(pairs, omegas)
        return KeyFormSeq(tuple(forms), omegas, tuple(ps), tuple(range(pairs.l + 2)))

    k = witness_value = None
    for candidate in range(1, pairs.l + 1):
        holds, value = s2(omegas, pairs, candidate)
        if not holds:
            k, witness_value = candidate, value
            break
    if k is None:
        raise WitnessError("no non-algebraic witness: the graph is algebraic-only")

    beta = represent(witness_value, [Fraction(w) for w in omegas[: k + 1]], ps[:k])
    assert beta[0] < 0, "a semigroup violation must force a negative x-exponent"
    base = _base_witness_forms(pairs, omegas)

    forms = list(base[: k + 2])
    forms.append(base[k + 1] - monomial_product(base[: k + 1], beta))
    for i in range(k + 3, pairs.l + 3):
        p_i = ps[i - 3]
        beta_i = represent(
            p_i * omegas[i - 2], [Fraction(w) for w in omegas[: i - 2]], ps[: i - 3]
        )
        exponents = beta_i[: k + 1] + [0] + beta_i[k + 1 :]
        forms.append(forms[i - 1] ** p_i - monomial_product(forms[: i - 1], exponents))

    values = tuple(omegas[: k + 1]) + (witness_value,) + tuple(omegas[k + 1 :])
    multipliers = tuple(ps[:k]) + (1,) + tuple(ps[k:])
    essential = tuple(range(k + 1)) + tuple(range(k + 2, pairs.l + 3))
    return KeyFormSeq(tuple(forms), values, multipliers, essential)


# ---------------------------------------------------------------------------
# DOT export


def export_dot(graph: DualGraph) -> str:
    """Deterministic DOT text; vertices in construction order, L boxed and
    E* doubly circled."""
    if not graph.vertices:
        raise GraphError("refusing to export an empty graph")
    shapes = {MARK_LINE: "box", MARK_ESTAR: "doublecircle"}
    lines = ["graph resolution {"]
    for v in graph.vertices:
        shape = shapes.get(v.mark, "circle")
        lines.append(f'  "{v.name}" [label="{v.name}\\n{v.weight}", shape={shape}];')
    for a, b in graph.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
