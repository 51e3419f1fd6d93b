"""Independent routes to one spin Hurwitz number, dispatched by name.

Each route returns a ``HurwitzValue`` and raises ``ScopeError`` for queries it cannot evaluate.
"""

from collections.abc import Callable

from loguru import logger
from sympy import Rational

from spin_hurwitz.models.hurwitz import HurwitzQuery, HurwitzValue, ScopeError
from spin_hurwitz.services.closed_forms import f01_series, one_part_single_fd
from spin_hurwitz.services.cohft_elsv import spin_elsv
from spin_hurwitz.services.fock import vev_spin_double, vev_spin_single
from spin_hurwitz.services.hurwitz_numbers import connected, disconnected
from spin_hurwitz.services.tr_engine import correlator, expand_hurwitz, two_point_expansion

TR_MAX_GENUS = 2
TR_MAX_POINTS = 3

Route = Callable[[HurwitzQuery], HurwitzValue]


def _require_single(query: HurwitzQuery, method: str) -> None:
    if query.is_double:
        raise ScopeError(f"{method} only computes single numbers")


def characters_route(query: HurwitzQuery) -> HurwitzValue:
    """Sergeev characters, connected by the formal logarithm when requested."""
    return connected(query) if query.connected else disconnected(query)


def fock_route(query: HurwitzQuery) -> HurwitzValue:
    """Vacuum expectations of neutral fermion operators.

    The expectation counts disconnected covers; connected requests are accepted only when every
    cover is connected, which is the case for single numbers with one part.

    Raises:
        ScopeError: For connected requests with more than one part.
    """
    if query.connected and (query.is_double or query.mu.length > 1):
        raise ScopeError("fock computes disconnected numbers; connected needs l(mu) = 1")
    if query.nu is not None:
        return vev_spin_double(query.g, query.mu, query.nu, query.r)
    return vev_spin_single(query.g, query.mu, query.r)


def closed_route(query: HurwitzQuery) -> HurwitzValue:
    """Forward-difference formula for one-part single numbers.

    Raises:
        ScopeError: For double numbers or more than one part.
    """
    _require_single(query, "closed")
    if query.mu.length != 1:
        raise ScopeError(f"closed formula needs l(mu) = 1, got {query.mu!r}")
    return one_part_single_fd(query.g, query.mu[0], query.r)


def tr_route(query: HurwitzQuery) -> HurwitzValue:
    """Expansion of the topological recursion correlators of the spin curve.

    ``(0,1)`` comes from the genus-zero free energy, ``(0,2)`` from the expansion of
    ``omega_{0,2}(z_1, z_2) - omega_{0,2}(X_1, X_2)``.

    Raises:
        ScopeError: For double or disconnected numbers and outside ``g <= 2``, ``n <= 3``.
    """
    _require_single(query, "tr")
    if not query.connected:
        raise ScopeError("tr computes connected numbers only")
    g, n = query.g, query.mu.length
    if g > TR_MAX_GENUS or n > TR_MAX_POINTS:
        raise ScopeError(f"tr supports g <= {TR_MAX_GENUS}, n <= {TR_MAX_POINTS}, got ({g},{n})")
    reason = query.structural_zero_reason()
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    degree = query.degree
    if (g, n) == (0, 1):
        value = f01_series(query.r, degree).coefficient(degree)
    elif (g, n) == (0, 2):
        value = two_point_expansion(query.r, degree)[(query.mu[0], query.mu[1])]
    else:
        numbers = expand_hurwitz(correlator(g, n, query.r), query.r, degree)
        value = numbers.get(query.mu, Rational(0))
    return HurwitzValue.computed(value)


def elsv_route(query: HurwitzQuery) -> HurwitzValue:
    """Spin ELSV formula: intersection numbers of the Bernoulli CohFT.

    ``(0,1)`` and ``(0,2)`` use the unstable conventions of ``spin_elsv``.

    Raises:
        ScopeError: For double or disconnected numbers and outside the stable-graph range.
    """
    _require_single(query, "elsv")
    if not query.connected:
        raise ScopeError("elsv computes connected numbers only")
    reason = query.structural_zero_reason()
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    return HurwitzValue.computed(spin_elsv(query.g, query.mu, query.r))


ROUTES: dict[str, Route] = {
    "characters": characters_route,
    "fock": fock_route,
    "closed": closed_route,
    "tr": tr_route,
    "elsv": elsv_route,
}


def evaluate(query: HurwitzQuery, method: str) -> HurwitzValue:
    """Evaluate a query by one named route.

    Returns:
        The value, a structural zero, or ``method-unavailable`` when the route is out of scope.

    Raises:
        ValueError: If the method name is unknown.
    """
    if method not in ROUTES:
        raise ValueError(f"Unknown method {method!r}, expected one of {list(ROUTES)}")
    try:
        result = ROUTES[method](query)
    except ScopeError as e:
        logger.warning(f"{method} unavailable for {query.label()}: {e}")
        return HurwitzValue.unavailable(str(e))
    logger.debug(f"{method} {query.label()}: {result.value} ({result.status.value})")
    return result
