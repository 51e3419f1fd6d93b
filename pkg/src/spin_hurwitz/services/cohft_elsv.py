"""The spin CohFT as a sum over stable graphs, and the spin ELSV formula.

For ``r = 2s`` and leaf residues ``a_i`` in ``0..s-1`` the class is

    Omega_{g,n}(v_{a_1} ... v_{a_n}) = 2^{2g-2} sum_Gamma sum_w s^{2g-1-h1}/|Aut| xi_*(
        prod_v exp(sum_m c_m(0) kappa_m(v))
        prod_e (1 - exp(-sum_m c_m(w(h)) (psi_h^m - (-psi_h')^m))) / (psi_h + psi_h')
        prod_i exp(-sum_m c_m(a_i) psi_i^m))

with ``c_m(a) = (-1)^m B_{m+1}((2a+1)/2s) / (m(m+1))``, and zero unless
``sum a_i = g - 1 (mod s)``. Boundary pushforwards are never built as classes: every decorated
graph is integrated vertex by vertex, kappa classes are traded for psi classes on extra
markings, and psi integrals come from the Dijkgraaf-Verlinde-Verlinde recursion.
"""

from collections import Counter
from collections.abc import Callable, Iterator, Sequence
from functools import lru_cache, partial
from itertools import permutations, product
from math import factorial, prod

from loguru import logger
from sympy import Rational, bernoulli
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement
from sympy.utilities.iterables import multiset_partitions

from spin_hurwitz.config import CACHE_SIZE
from spin_hurwitz.models.graphs import Edge, SpinWeighting, StableGraph
from spin_hurwitz.models.hurwitz import ScopeError
from spin_hurwitz.models.partition import Partition
from spin_hurwitz.models.tautological import (
    TautExpression,
    class_ring,
    truncate,
    truncated_exp,
    weighted_degree,
)

MAX_GENUS = 2
MAX_POINTS = 3

Coefficient = Callable[[int, int], Rational]
GraphKey = tuple[tuple[int, ...], tuple[int, ...], tuple[Edge, ...]]


def _double_factorial(m: int) -> int:
    return prod(range(m, 0, -2))


class IntersectionNumbers:
    """Witten-Kontsevich numbers ``<tau_{d_1} ... tau_{d_n}>_g``.

    String and dilaton equations peel off ``tau_0`` and ``tau_1``; otherwise the largest index is
    removed with the DVV recursion. Values are memoized by genus and sorted exponents.
    """

    def __init__(self) -> None:
        """Start with an empty memo."""
        self._cache: dict[tuple[int, tuple[int, ...]], Rational] = {}

    def __call__(self, g: int, exponents: Sequence[int]) -> Rational:
        """The intersection number, zero off dimension or on unstable moduli."""
        n = len(exponents)
        if g < 0 or 2 * g - 2 + n <= 0 or any(d < 0 for d in exponents):
            return Rational(0)
        if sum(exponents) != 3 * g - 3 + n:
            return Rational(0)
        key = (g, tuple(sorted(exponents, reverse=True)))
        if key not in self._cache:
            self._cache[key] = self._virasoro(*key)
        return self._cache[key]

    def _virasoro(self, g: int, d: tuple[int, ...]) -> Rational:
        n = len(d)
        if g == 0 and n == 3:
            return Rational(1)
        if g == 1 and d == (1,):
            return Rational(1, 24)
        if 0 in d:
            rest = list(d)
            rest.remove(0)
            total = Rational(0)
            for j, dj in enumerate(rest):
                if dj > 0:
                    total += self(g, rest[:j] + [dj - 1] + rest[j + 1 :])
            return total
        if 1 in d:
            rest = list(d)
            rest.remove(1)
            return (2 * g - 2 + len(rest)) * self(g, rest)

        k = d[0] - 1
        rest = d[1:]
        total = Rational(0)
        for j, dj in enumerate(rest):
            others = rest[:j] + rest[j + 1 :]
            weight = Rational(_double_factorial(2 * k + 2 * dj + 1), _double_factorial(2 * dj - 1))
            total += weight * self(g, (k + dj,) + others)
        for a in range(k):
            b = k - 1 - a
            weight = Rational(_double_factorial(2 * a + 1) * _double_factorial(2 * b + 1), 2)
            inner = self(g - 1, (a, b) + rest)
            for mask in range(2 ** len(rest)):
                left = tuple(x for i, x in enumerate(rest) if mask >> i & 1)
                right = tuple(x for i, x in enumerate(rest) if not mask >> i & 1)
                for g1 in range(g + 1):
                    inner += self(g1, (a,) + left) * self(g - g1, (b,) + right)
            total += weight * inner
        return total / _double_factorial(2 * k + 3)


_INTERSECTIONS = IntersectionNumbers()


def psi_intersection(g: int, exponents: Sequence[int]) -> Rational:
    """``int_{M_{g,n}-bar} prod psi_i^{d_i}``, zero when ``sum d_i != 3g - 3 + n``."""
    exponents = tuple(exponents)
    if sum(exponents) != 3 * g - 3 + len(exponents):
        logger.debug(f"<tau {exponents}>_{g} is off dimension, returning 0")
        return Rational(0)
    return _INTERSECTIONS(g, exponents)


def _reduce_monomial(
    psi: tuple[int, ...], kappas: tuple[int, ...]
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Signed psi monomials on extra markings equal to ``prod psi^psi prod kappa``."""
    m = len(kappas)
    if m == 0:
        yield 1, psi
        return
    for blocks in multiset_partitions(list(range(m))):
        sign = -1 if (m - len(blocks)) % 2 else 1
        yield sign, psi + tuple(sum(kappas[j] for j in block) + 1 for block in blocks)


def kappa_reduce(expr: TautExpression) -> dict[tuple[int, ...], Rational]:
    """Rewrite every kappa monomial as psi monomials on ``M_{g, n+k}-bar``.

    ``int prod psi^d kappa_{b_1} ... kappa_{b_m}`` is the signed sum over set partitions ``P`` of
    ``{1..m}`` of ``(-1)^{m-|P|} int prod psi^d prod_{B in P} psi_B^{1 + sum_{j in B} b_j}``,
    where the ``psi_B`` sit on added markings (Arbarello-Cornalba kappa classes).

    Returns:
        Map from psi exponent tuples (first ``n`` entries on the original markings) to
        coefficients.
    """
    reduced: dict[tuple[int, ...], Rational] = {}
    for psi, kappas, coeff in expr.terms():
        for sign, exponents in _reduce_monomial(psi, kappas):
            reduced[exponents] = reduced.get(exponents, Rational(0)) + sign * coeff
    return {key: value for key, value in reduced.items() if value}


def integrate(expr: TautExpression) -> Rational:
    """``int_{M_{g,n}-bar}`` of a psi/kappa polynomial."""
    return sum(
        (c * psi_intersection(expr.g, exps) for exps, c in kappa_reduce(expr).items()),
        Rational(0),
    )


@lru_cache(maxsize=CACHE_SIZE)
def _vertex_integral(g: int, psi: tuple[int, ...], kappas: tuple[int, ...]) -> Rational:
    if sum(psi) + sum(kappas) != 3 * g - 3 + len(psi):
        return Rational(0)
    return integrate(TautExpression.monomial(g, len(psi), psi, kappas))


# Stable graphs


def _canonical(genera: tuple[int, ...], legs: tuple[int, ...], edges: Sequence[Edge]) -> GraphKey:
    best: GraphKey | None = None
    for perm in permutations(range(len(genera))):
        relabelled = [0] * len(genera)
        for v, gv in enumerate(genera):
            relabelled[perm[v]] = gv
        key = (
            tuple(relabelled),
            tuple(perm[v] for v in legs),
            tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges)),
        )
        if best is None or key < best:
            best = key
    assert best is not None
    return best  # type: ignore[return-value]


def _automorphism_order(key: GraphKey) -> int:
    genera, legs, edges = key
    counts = Counter(edges)
    vertex_maps = 0
    for perm in permutations(range(len(genera))):
        if any(genera[perm[v]] != gv for v, gv in enumerate(genera)):
            continue
        if any(perm[v] != v for v in legs):
            continue
        if Counter(tuple(sorted((perm[a], perm[b]))) for a, b in edges) == counts:
            vertex_maps += 1
    half_edge_maps = prod(
        factorial(k) * (2**k if a == b else 1) for (a, b), k in counts.items()
    )
    return vertex_maps * half_edge_maps


def _degenerations(key: GraphKey) -> Iterator[GraphKey]:
    """Graphs obtained by adding one node at a vertex: a self-loop or a splitting."""
    genera, legs, edges = key
    new = len(genera)
    for v, gv in enumerate(genera):
        if gv > 0:
            yield genera[:v] + (gv - 1,) + genera[v + 1 :], legs, edges + ((v, v),)
        leg_slots = [i for i, u in enumerate(legs) if u == v]
        end_slots = [(e, end) for e, pair in enumerate(edges) for end in (0, 1) if pair[end] == v]
        slots = len(leg_slots) + len(end_slots)
        for g1 in range(gv + 1):
            g2 = gv - g1
            for mask in range(2**slots):
                moved = [bool(mask >> j & 1) for j in range(slots)]
                n2 = sum(moved) + 1
                n1 = slots - sum(moved) + 1
                if 2 * g1 - 2 + n1 <= 0 or 2 * g2 - 2 + n2 <= 0:
                    continue
                new_legs = list(legs)
                for j, i in enumerate(leg_slots):
                    if moved[j]:
                        new_legs[i] = new
                new_edges = [list(pair) for pair in edges]
                for j, (e, end) in enumerate(end_slots, start=len(leg_slots)):
                    if moved[j]:
                        new_edges[e][end] = new
                new_edges.append([v, new])
                yield (
                    genera[:v] + (g1,) + genera[v + 1 :] + (g2,),
                    tuple(new_legs),
                    tuple(tuple(sorted(pair)) for pair in new_edges),  # type: ignore[misc]
                )


@lru_cache(maxsize=None)
def _stable_graphs(g: int, n: int) -> tuple[StableGraph, ...]:
    start: GraphKey = ((g,), (0,) * n, ())
    seen = {start}
    queue = [start]
    while queue:
        key = queue.pop()
        for child in _degenerations(key):
            canonical = _canonical(*child)
            if canonical not in seen:
                seen.add(canonical)
                queue.append(canonical)
    graphs = tuple(
        StableGraph(genera=k[0], legs=k[1], edges=k[2], automorphisms=_automorphism_order(k))
        for k in sorted(seen, key=lambda k: (len(k[2]), k))
    )
    logger.debug(f"{len(graphs)} stable graphs of type ({g},{n})")
    return graphs


def enumerate_stable_graphs(g: int, n: int) -> list[StableGraph]:
    """Every stable graph of type ``(g, n)``, once, with its automorphism order.

    Raises:
        ValueError: If ``2g - 2 + n <= 0``.
        ScopeError: Outside ``g <= 2``, ``1 <= n <= 3``.
    """
    if g < 0 or 2 * g - 2 + n <= 0:
        raise ValueError(f"({g},{n}) is not a stable type")
    if g > MAX_GENUS or not 1 <= n <= MAX_POINTS:
        raise ScopeError(
            f"Stable graphs are enumerated for g <= {MAX_GENUS} and 1 <= n <= {MAX_POINTS}, "
            f"got ({g},{n})"
        )
    return list(_stable_graphs(g, n))


def _check_residues(residues: Sequence[int], s: int) -> tuple[int, ...]:
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    if any(not 0 <= a < s for a in residues):
        raise ValueError(f"Residues must lie in 0..{s - 1}, got {list(residues)}")
    return tuple(residues)


def enumerate_spin_weightings(
    graph: StableGraph, residues: Sequence[int], s: int
) -> list[SpinWeighting]:
    """All spin weightings modulo ``s`` of ``graph`` with leaf residues ``a``.

    Raises:
        ValueError: If the number of residues differs from the number of legs.
    """
    leaves = _check_residues(residues, s)
    if len(leaves) != graph.n:
        raise ValueError(f"Need {graph.n} leaf residues, got {list(residues)}")
    found = []
    for choice in product(range(s), repeat=graph.edge_count):
        weighting = SpinWeighting(
            s=s, edges=tuple((w, (-1 - w) % s) for w in choice), leaves=leaves
        )
        if weighting.satisfies(graph):
            found.append(weighting)
    return found


# Coefficients


@lru_cache(maxsize=None)
def r_matrix_coefficient(m: int, a: int, s: int) -> Rational:
    """``(-1)^m B_{m+1}((2a+1)/2s) / (m(m+1))``.

    Raises:
        ValueError: If ``m < 1``.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return (-1) ** m * bernoulli(m + 1, Rational(2 * a + 1, 2 * s)) / (m * (m + 1))


def bernoulli_sum_check(s: int) -> bool:
    """``sum_{a=0}^{s-1} B_2((2a+1)/2s) = -1/(12s)``."""
    total = sum((bernoulli(2, Rational(2 * a + 1, 2 * s)) for a in range(s)), Rational(0))
    return total == Rational(-1, 12 * s)


# Graph sums


def _leaf_powers(exponent: int, cap: int) -> list[Rational]:
    return [Rational(int(j == exponent)) for j in range(cap + 1)]


def _geometric(x: Rational, cap: int) -> list[Rational]:
    return [x**j for j in range(cap + 1)]


def _decorated_integral(
    graph: StableGraph,
    weighting: SpinWeighting,
    coefficient: Coefficient,
    leaf_series: Sequence[Sequence[Rational]],
    cap: int,
) -> Rational:
    """Integral of one decorated graph, the pushforward factor excluded."""
    names = [f"l{i}" for i in range(graph.n)]
    names += [f"h{e}_{end}" for e, end, _ in graph.half_edges()]
    kappa_slots = [
        (v, m) for v in range(graph.vertex_count) for m in range(1, graph.dimension(v) + 1)
    ]
    names += [f"k{v}_{m}" for v, m in kappa_slots]
    weights = [1] * (graph.n + 2 * graph.edge_count) + [m for _, m in kappa_slots]
    base = class_ring(tuple(names))
    gens = base.gens
    leg = gens[: graph.n]
    half = gens[graph.n : graph.n + 2 * graph.edge_count]
    kappa = dict(zip(kappa_slots, gens[graph.n + 2 * graph.edge_count :]))

    def mul(left: PolyElement, right: PolyElement) -> PolyElement:
        return truncate(left * right, weights, cap)[0]

    integrand = base.one
    for v in range(graph.vertex_count):
        exponent = base.zero
        for m in range(1, min(graph.dimension(v), cap) + 1):
            exponent += kappa[(v, m)] * QQ.convert(coefficient(m, 0))
        integrand = mul(integrand, truncated_exp(exponent, weights, cap))
    for i, a in enumerate(weighting.leaves):
        exponent = base.zero
        for m in range(1, cap + 1):
            exponent -= leg[i] ** m * QQ.convert(coefficient(m, a))
        extra = base.zero
        for j, c in enumerate(leaf_series[i][: cap + 1]):
            extra += leg[i] ** j * QQ.convert(c)
        integrand = mul(integrand, mul(truncated_exp(exponent, weights, cap), extra))
    for e, (w, _) in enumerate(weighting.edges):
        x, y = half[2 * e], half[2 * e + 1]
        exponent = base.zero
        for m in range(1, cap + 2):
            exponent += (x**m - (-y) ** m) * QQ.convert(coefficient(m, w))
        numerator = base.one - truncated_exp(-exponent, weights, cap + 1)
        quotient, remainder = numerator.div(x + y)
        if remainder:
            raise ArithmeticError(f"Edge factor of {graph.describe()} is not divisible")
        integrand = mul(integrand, quotient)

    vertex_of_slot = list(graph.legs) + [v for _, _, v in graph.half_edges()]
    total = Rational(0)
    for monom, coeff in integrand.items():
        if weighted_degree(monom, weights) != cap:
            continue
        value = QQ.to_sympy(coeff)
        for v, gv in enumerate(graph.genera):
            psi = tuple(e for e, u in zip(monom, vertex_of_slot) if u == v)
            kappas: list[int] = []
            for (u, m), gen_index in zip(kappa_slots, range(len(vertex_of_slot), len(monom))):
                if u == v:
                    kappas.extend([m] * monom[gen_index])
            value *= _vertex_integral(gv, psi, tuple(kappas))
            if not value:
                break
        total += value
    return total


def _graph_sum(
    g: int,
    residues: tuple[int, ...],
    s: int,
    coefficient: Coefficient,
    leaf_series: Sequence[Sequence[Rational]],
    degree: int,
) -> Rational:
    """``2^{2g-2} sum s^{2g-1-h1}/|Aut| int`` over decorated graphs, class degree ``degree``."""
    n = len(residues)
    total = Rational(0)
    for graph in enumerate_stable_graphs(g, n):
        cap = degree - graph.edge_count
        if cap < 0:
            continue
        weightings = enumerate_spin_weightings(graph, residues, s)
        if not weightings:
            continue
        weight = Rational(s) ** (2 * g - 1 - graph.h1) / graph.automorphisms
        for weighting in weightings:
            total += weight * _decorated_integral(
                graph, weighting, coefficient, leaf_series, cap
            )
    return Rational(2) ** (2 * g - 2) * total


def _modular_obstruction(g: int, residues: Sequence[int], s: int) -> bool:
    return (sum(residues) - g + 1) % s != 0


def _half(r: int) -> int:
    if r <= 0 or r % 2:
        raise ValueError(f"r must be a positive even integer, got {r}")
    return r // 2


def omega_integral(
    g: int, n: int, residues: Sequence[int], r: int, psi_powers: Sequence[int]
) -> Rational:
    """``int_{M_{g,n}-bar} Omega_{g,n}(v_{a_1} ... v_{a_n}) prod psi_i^{k_i}``.

    Raises:
        ValueError: On unstable ``(g, n)``, odd ``r``, residues outside ``0..s-1``, negative or
            missing psi powers.
        ScopeError: Outside the enumerated graph range.
    """
    s = _half(r)
    leaves = _check_residues(residues, s)
    if len(leaves) != n or len(psi_powers) != n:
        raise ValueError(
            f"Need {n} residues and psi powers, got {list(residues)}, {list(psi_powers)}"
        )
    if any(k < 0 for k in psi_powers):
        raise ValueError(f"psi powers must be non-negative, got {list(psi_powers)}")
    enumerate_stable_graphs(g, n)
    if _modular_obstruction(g, leaves, s):
        logger.debug(f"Omega_{g},{n} vanishes on residues {leaves} (mod {s})")
        return Rational(0)
    dimension = 3 * g - 3 + n
    if sum(psi_powers) > dimension:
        return Rational(0)
    series = [_leaf_powers(k, dimension) for k in psi_powers]
    value = _graph_sum(g, leaves, s, partial(r_matrix_coefficient, s=s), series, dimension)
    logger.debug(f"int Omega_{g},{n}(v_{leaves}) psi^{tuple(psi_powers)} = {value}")
    return value


def omega_class_11(s: int) -> tuple[Rational, Rational]:
    """Coefficients ``(c_0, c_1)`` of ``Omega_{1,1}(v_0) = c_0 + c_1 psi_1``, read off the sum.

    On ``M_{1,1}-bar`` every degree-one class is a multiple of ``psi_1`` and ``int psi_1 = 1/24``.
    """
    r = 2 * s
    c0 = 24 * omega_integral(1, 1, (0,), r, (1,))
    c1 = 24 * omega_integral(1, 1, (0,), r, (0,))
    return c0, c1


def _as_partition(mu: object) -> Partition:
    if isinstance(mu, Partition):
        return mu
    return Partition([mu] if isinstance(mu, int) else mu)  # type: ignore[arg-type]


def decompose_part(mu: int, s: int) -> tuple[int, int]:
    """``([mu], <mu>)`` with ``mu = 2s[mu] + 2s - (2<mu> + 1)`` and ``0 <= <mu> < s``.

    Raises:
        ValueError: If ``mu`` is not a positive odd integer.
    """
    if mu <= 0 or mu % 2 == 0:
        raise ValueError(f"Parts must be positive and odd, got {mu}")
    q = (mu + 1) // 2
    residue = (-q) % s
    floor = (q + residue) // s - 1
    if 2 * s * floor + 2 * s - 2 * residue - 1 != mu:
        raise ArithmeticError(f"Decomposition of {mu} modulo {2 * s} failed")
    return floor, residue


def spin_elsv(g: int, mu: object, r: int) -> Rational:
    """Spin single Hurwitz number from the spin ELSV formula.

    ``2^{1-g} r^{((r+1)(2g-2+n)+d)/r} prod (mu_i/r)^{[mu_i]}/[mu_i]!
    int Omega_{g,n}(v_{<mu_1>} ... v_{<mu_n>}) / prod (1 - mu_i psi_i / r)``.

    The unstable terms carry the genus-zero single-vertex weight ``1/(4s)`` times
    ``int_{M_{0,1}-bar} 1/(1 - x psi) = 1/x^2`` and
    ``int_{M_{0,2}-bar} 1/((1 - x_1 psi_1)(1 - x_2 psi_2)) = 1/(x_1 + x_2)``.

    Raises:
        ValueError: If ``mu`` has an even part or ``r`` is not even.
        ScopeError: Outside the graph range.
    """
    s = _half(r)
    parts = _as_partition(mu)
    n = parts.length
    if g > 0 or n > 2:
        enumerate_stable_graphs(g, n)
    decomposition = [decompose_part(m, s) for m in parts]
    residues = tuple(res for _, res in decomposition)
    if _modular_obstruction(g, residues, s):
        logger.debug(f"ELSV g={g} r={r} mu={parts!r}: residues obstruct, value 0")
        return Rational(0)
    numerator = (r + 1) * (2 * g - 2 + n) + parts.size
    if numerator % r:
        raise ArithmeticError(f"Power of r is not integral: {numerator}/{r}")
    prefactor = Rational(2) ** (1 - g) * Rational(r) ** (numerator // r)
    for m, (floor, _) in zip(parts, decomposition):
        prefactor *= Rational(m, r) ** floor / factorial(floor)

    if (g, n) == (0, 1):
        integral = Rational(1, 4 * s) / Rational(parts[0], r) ** 2
    elif (g, n) == (0, 2):
        integral = Rational(1, 4 * s) / Rational(parts.size, r)
    else:
        dimension = 3 * g - 3 + n
        series = [_geometric(Rational(m, r), dimension) for m in parts]
        integral = _graph_sum(
            g, residues, s, partial(r_matrix_coefficient, s=s), series, dimension
        )
    value = prefactor * integral
    logger.debug(f"ELSV g={g} r={r} mu={parts!r}: {value}")
    return value


# Hodge integrals


def _stable(g: int, n: int) -> bool:
    return 2 * g - 2 + n > 0


def _multinomial(total: int, parts: Sequence[int]) -> int:
    return factorial(total) // prod(factorial(k) for k in parts)


def _lambda_top_constant(g: int) -> Rational:
    """``int_{M_{g,1}-bar} psi^{2g-2} lambda_g``."""
    return (Rational(2) ** (2 * g - 1) - 1) * abs(bernoulli(2 * g)) / (
        Rational(2) ** (2 * g - 1) * factorial(2 * g)
    )


def _lambda_one(g: int, psi: tuple[int, ...]) -> Rational:
    """``int psi^d lambda_1`` from ``12 lambda_1 = kappa_1 - sum psi_i + delta``.

    ``delta`` is the whole boundary: the irreducible divisor glued from ``M_{g-1,n+2}-bar`` and
    the separating divisors ``M_{h,S+1}-bar x M_{g-h,S^c+1}-bar``, each with its factor ``1/2``.
    """
    n = len(psi)
    total = _vertex_integral(g, psi, (1,))
    for i in range(n):
        total -= psi_intersection(g, psi[:i] + (psi[i] + 1,) + psi[i + 1 :])
    if g > 0:
        total += psi_intersection(g - 1, psi + (0, 0)) / 2
    for h in range(g + 1):
        for mask in range(2**n):
            left = tuple(d for i, d in enumerate(psi) if mask >> i & 1)
            right = tuple(d for i, d in enumerate(psi) if not mask >> i & 1)
            if _stable(h, len(left) + 1) and _stable(g - h, len(right) + 1):
                total += (
                    psi_intersection(h, left + (0,)) * psi_intersection(g - h, right + (0,)) / 2
                )
    return total / 12


def hodge_integral(g: int, psi_powers: Sequence[int], lambdas: Sequence[int] = ()) -> Rational:
    """``int_{M_{g,n}-bar} prod psi_i^{d_i} prod_j lambda_{l_j}`` for ``g <= 2``.

    Mumford's relation ``c(E) c(E-dual) = 1`` gives ``lambda_1^2 = 0`` in genus one and
    ``lambda_1^2 = 2 lambda_2``, ``lambda_2^2 = 0`` in genus two. What survives is a pure psi
    number, ``lambda_g`` and ``lambda_g lambda_{g-1}`` (closed formulas in the psi powers), or
    ``lambda_1`` in genus two (boundary expression of ``12 lambda_1``).

    Raises:
        ValueError: On unstable ``(g, n)``, negative psi powers or lambda indices outside
            ``1..g``.
        ScopeError: If ``g > 2``.
    """
    psi = tuple(psi_powers)
    n = len(psi)
    if g < 0 or not _stable(g, n) or any(d < 0 for d in psi):
        raise ValueError(f"Need stable (g, n) and non-negative psi powers, got g={g} {list(psi)}")
    if g > MAX_GENUS:
        raise ScopeError(f"Hodge integrals are implemented for g <= {MAX_GENUS}, got g={g}")
    if any(not 1 <= j <= g for j in lambdas):
        raise ValueError(f"lambda indices must lie in 1..{g}, got {list(lambdas)}")
    counts = Counter(lambdas)
    ones, twos, coeff = counts[1], counts[2], 1
    if g == 1 and ones > 1:
        return Rational(0)
    while ones > 1:
        ones, twos, coeff = ones - 2, twos + 1, coeff * 2
    if twos > 1:
        return Rational(0)
    if sum(psi) + ones + 2 * twos != 3 * g - 3 + n:
        return Rational(0)
    if ones == twos == 0:
        return psi_intersection(g, psi)
    if ones + 2 * twos == g:
        return coeff * _multinomial(2 * g - 3 + n, psi) * _lambda_top_constant(g)
    if ones == twos == 1:
        weight = prod(_double_factorial(2 * d - 1) for d in psi)
        return coeff * Rational(
            factorial(2 * g - 3 + n) * abs(bernoulli(2 * g)),
            2 ** (2 * g - 1) * factorial(2 * g) * weight,
        )
    return coeff * _lambda_one(g, psi)


def double_hodge_integral(g: int, n: int, psi_powers: Sequence[int]) -> Rational:
    """``int 2^{2g-2} Lambda(1) Lambda(-1/2) prod psi_i^{k_i}``.

    Expanded into the monomials ``(-1/2)^j lambda_i lambda_j`` and summed with
    :func:`hodge_integral`.

    Raises:
        ValueError: On unstable ``(g, n)`` or negative psi powers.
        ScopeError: If ``g > 2``.
    """
    if len(psi_powers) != n or any(k < 0 for k in psi_powers):
        raise ValueError(f"Need {n} non-negative psi powers, got {list(psi_powers)}")
    total = Rational(0)
    for i, j in product(range(g + 1), repeat=2):
        lambdas = tuple(m for m in (i, j) if m)
        total += Rational(-1, 2) ** j * hodge_integral(g, psi_powers, lambdas)
    return Rational(2) ** (2 * g - 2) * total


def spin_elsv_double_hodge(g: int, mu: object) -> Rational:
    """``r = 2`` numbers as double Hodge integrals.

    ``2^{4g-4+2n} prod mu_i^{b_i-1}/(b_i-1)! int Lambda(1) Lambda(-1/2) / prod (1 - mu_i psi_i/2)``
    with ``mu_i = 2b_i - 1``.

    Raises:
        ValueError: If ``mu`` has an even part or ``(g, n)`` is unstable.
        ScopeError: If ``g > 2``.
    """
    parts = _as_partition(mu)
    if not parts.is_odd:
        raise ValueError(f"Parts must be odd, got {parts!r}")
    n = parts.length
    if not _stable(g, n):
        raise ValueError(f"(g, n) = ({g}, {n}) is unstable")
    prefactor = Rational(2) ** (2 * g - 2 + 2 * n)
    for m in parts:
        b = (m + 1) // 2
        prefactor *= Rational(m) ** (b - 1) / factorial(b - 1)
    dimension = 3 * g - 3 + n
    integral = Rational(0)
    for powers in product(range(dimension + 1), repeat=n):
        if sum(powers) <= dimension:
            weight = prod((Rational(m, 2) ** k for m, k in zip(parts, powers)), start=Rational(1))
            integral += weight * double_hodge_integral(g, n, powers)
    return prefactor * integral
