"""Neutral-fermion Fock space: normal ordering, bosons, cut-and-join and vacuum expectations.

States are combinations of canonical monomials ``phi_{i_1} ... phi_{i_k} |0>`` with
``i_1 > ... > i_k >= 0``; the fermions satisfy ``{phi_k, phi_l} = (-1)^k delta_{k+l,0}``, so
``phi_0^2 = 1/2`` and every negative mode annihilates the vacuum. Operators used here:

    F_{j,k}   = (-1)^j phi_j phi_k
    alpha_m   = -sum_{k > -m/2} F_{k,-k-m}                     (m odd)
    F_{r+1}   = sum_{k > 0} k^{r+1} F_{k,-k}                    (cut-and-join)
    E_m(z)    = 1/2 sum_k e^{(k + m/2) z} F_{k,-k-m}            (m != 0)
    Ê_0(z)    = sum_{k > 0} sinh(k z) F_{k,-k}                  (normal ordered)

No state ever carries the ``2^{delta/2}`` normalization of the orthonormal basis.
"""

from collections.abc import Iterable
from math import factorial, prod
from typing import Any

from loguru import logger
from sympy import Poly, Rational, expand, symbols

from spin_hurwitz.models.clifford import (
    VACUUM,
    CliffordMonomial,
    CliffordState,
    OperatorKind,
    QuadraticOperator,
)
from spin_hurwitz.models.hurwitz import HurwitzQuery, HurwitzValue, ScopeError
from spin_hurwitz.models.partition import Partition, PartitionClass
from spin_hurwitz.models.series import TruncatedSeries
from spin_hurwitz.services.closed_forms import coth_half_series, varsigma_series
from spin_hurwitz.services.partitions import enumerate_partitions


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _phi_on_monomial(k: int, monomial: CliffordMonomial) -> tuple[Rational, CliffordMonomial]:
    """``phi_k`` times one canonical monomial, as (coefficient, monomial)."""
    if k > 0:
        if k in monomial:
            return Rational(0), VACUUM
        position = sum(1 for i in monomial if i > k)
        return Rational(_sign(position)), monomial[:position] + (k,) + monomial[position:]
    if k < 0:
        if -k not in monomial:
            return Rational(0), VACUUM
        position = monomial.index(-k)
        return (
            Rational(_sign(position) * _sign(k)),
            monomial[:position] + monomial[position + 1 :],
        )
    if monomial and monomial[-1] == 0:
        return Rational(_sign(len(monomial) - 1), 2), monomial[:-1]
    return Rational(_sign(len(monomial))), monomial + (0,)


def apply_phi(k: int, state: CliffordState) -> CliffordState:
    """Left-multiply by ``phi_k`` and rewrite to canonical form.

    Args:
        k: Fermion mode, any integer.
        state: The state acted upon.

    Returns:
        The canonical state ``phi_k * state``.
    """
    result: dict[CliffordMonomial, Rational] = {}
    for monomial, c in state.terms.items():
        factor, image = _phi_on_monomial(k, monomial)
        if factor != 0:
            result[image] = result.get(image, Rational(0)) + factor * c
    return CliffordState(result)


def apply_f(j: int, k: int, state: CliffordState) -> CliffordState:
    """Apply ``F_{j,k} = (-1)^j phi_j phi_k``."""
    return apply_phi(j, apply_phi(k, state)).scale(_sign(j))


def apply_f_normal(j: int, k: int, state: CliffordState) -> CliffordState:
    """Apply the normal-ordered ``:F_{j,k}:``, which drops the vacuum expectation of ``F_{j,k}``."""
    result = apply_f(j, k, state)
    if j + k == 0:
        return result - state.scale(vev(apply_f(j, k, CliffordState.vacuum())))
    return result


def vev(state: CliffordState) -> Rational:
    """Vacuum expectation value: the coefficient of the empty monomial."""
    return state.coefficient(VACUUM)


def _max_index(state: CliffordState) -> int:
    return max((monomial[0] for monomial in state.terms if monomial), default=0)


def _mode_range(m: int, state: CliffordState) -> range:
    bound = _max_index(state) + abs(m) + 1
    return range(-bound, bound + 1)


def apply_alpha(m: int, state: CliffordState) -> CliffordState:
    """Apply the boson ``alpha_m = -sum_{k > -m/2} F_{k,-k-m}``.

    Args:
        m: Nonzero odd mode; ``alpha_m`` lowers the energy by ``m``.
        state: The state acted upon.

    Returns:
        ``alpha_m * state``.

    Raises:
        ValueError: If ``m`` is even (the operator vanishes identically).
    """
    if m % 2 == 0:
        raise ValueError(f"alpha_m is only defined for odd m, got {m}")
    result = CliffordState()
    for k in _mode_range(m, state):
        if 2 * k > -m:
            result = result - apply_f(k, -k - m, state)
    return result


def apply_cutjoin(r: int, state: CliffordState) -> CliffordState:
    """Apply ``F_{r+1} = sum_{k > 0} k^{r+1} F_{k,-k}``.

    ``F_{k,-k}`` counts the index ``k``, so the operator is diagonal with eigenvalue
    ``p_{r+1}(lambda)`` on the monomial of a strict partition ``lambda``.

    Raises:
        ValueError: If ``r`` is odd or not positive.
    """
    if r <= 0 or r % 2:
        raise ValueError(f"The cut-and-join parameter r must be positive and even, got {r}")
    result = CliffordState()
    indices = {i for monomial in state.terms for i in monomial if i > 0}
    for k in sorted(indices):
        result = result + apply_f(k, -k, state).scale(k ** (r + 1))
    return result


def _e_coefficient(m: int, j: int, state: CliffordState) -> CliffordState:
    """``[z^j] E_m(z)`` for ``m != 0``."""
    half_m = Rational(m, 2)
    result = CliffordState()
    for k in _mode_range(m, state):
        weight = (k + half_m) ** j / factorial(j)
        if weight != 0:
            result = result + apply_f(k, -k - m, state).scale(weight / 2)
    return result


def _e_hat_zero_coefficient(j: int, state: CliffordState) -> CliffordState:
    """``[z^j]`` of the normal-ordered ``Ê_0(z)``; only odd ``j`` survive."""
    if j % 2 == 0:
        return CliffordState()
    result = CliffordState()
    indices = {i for monomial in state.terms for i in monomial if i > 0}
    for k in sorted(indices):
        result = result + apply_f(k, -k, state).scale(Rational(k**j, factorial(j)))
    return result


def apply_e_operator(m: int, z_order: int, state: CliffordState) -> list[CliffordState]:
    """Coefficients ``[z^j] E_m(z) state`` for ``j = 0..z_order``.

    Raises:
        ValueError: If ``m = 0``; use :func:`apply_normal_ordered_e0`, the constant part of
            ``E_0`` is the scalar :func:`e_operator_vev`.
    """
    if m == 0:
        raise ValueError("E_0 is applied through its normal-ordered part Ê_0")
    return [_e_coefficient(m, j, state) for j in range(z_order + 1)]


def apply_normal_ordered_e0(z_order: int, state: CliffordState) -> list[CliffordState]:
    """Coefficients ``[z^j] Ê_0(z) state`` for ``j = 0..z_order``."""
    return [_e_hat_zero_coefficient(j, state) for j in range(z_order + 1)]


def _operator_coefficient(m: int, j: int, state: CliffordState) -> CliffordState:
    if m == 0:
        return _e_hat_zero_coefficient(j, state)
    return _e_coefficient(m, j, state)


def _operator_coefficients(m: int, z_order: int, state: CliffordState) -> list[CliffordState]:
    return [_operator_coefficient(m, j, state) for j in range(z_order + 1)]


def apply_operator(operator: QuadraticOperator, state: CliffordState) -> CliffordState:
    """Apply a described quadratic operator.

    Args:
        operator: Which operator, with its indices.
        state: The state acted upon.

    Returns:
        The image state; for ``E`` operators the ``z^j`` coefficient with ``j = operator.j``.
    """
    kind = operator.kind
    if kind is OperatorKind.F:
        return apply_f(operator.j, operator.k, state)
    if kind is OperatorKind.F_NORMAL:
        return apply_f_normal(operator.j, operator.k, state)
    if kind is OperatorKind.ALPHA:
        return apply_alpha(operator.m, state)
    if kind is OperatorKind.CUT_JOIN:
        return apply_cutjoin(operator.r, state)
    if kind is OperatorKind.E:
        return _e_coefficient(operator.m, operator.j, state)
    return _e_hat_zero_coefficient(operator.j, state)


def e_operator_vev(m: int, order: int) -> TruncatedSeries:
    """Laurent expansion of ``<E_m(z)> = delta_{m,0} coth(z/2)/4`` up to ``z^order``."""
    if m != 0:
        return TruncatedSeries([0] * (order + 2), valuation=-1)
    return coth_half_series(order).scale(Rational(1, 4))


def basis_monomials(max_energy: int) -> list[CliffordMonomial]:
    """Every canonical monomial of energy at most ``max_energy``, with and without ``phi_0``."""
    result: list[CliffordMonomial] = []
    for energy_level in range(max_energy + 1):
        for lam in enumerate_partitions(energy_level, PartitionClass.STRICT):
            result.append(tuple(lam))
            result.append(tuple(lam) + (0,))
    return result


def alpha_negative_product_expansion(mu: Partition) -> CliffordState:
    """Apply ``prod_i alpha_{-mu_i}`` to the vacuum.

    The coefficient of the monomial of a strict ``lambda`` is ``zeta^lambda_mu / 2^{l(mu)}``.

    Raises:
        ValueError: If ``mu`` has an even part.
    """
    mu = Partition(mu)
    if not mu.is_odd:
        raise ValueError(f"Bosonic modes are odd, got {mu!r}")
    state = CliffordState.vacuum()
    for part in mu:
        state = apply_alpha(-part, state)
    return state


def apply_exp_alpha_one(state: CliffordState) -> CliffordState:
    """Apply ``exp(alpha_1)``; the sum terminates because ``alpha_1`` lowers the energy by one."""
    result = state
    term = state
    j = 0
    while not term.is_zero:
        j += 1
        term = apply_alpha(1, term).scale(Rational(1, j))
        result = result + term
    return result


def one_alpha_correlator(mu: int, r: int, b: int) -> Rational:
    """``<exp(alpha_1) F_{r+1}^b alpha_{-mu}>`` by direct operator application.

    Args:
        mu: Odd positive mode.
        r: Even positive cut-and-join parameter.
        b: Number of cut-and-join insertions.

    Returns:
        The exact vacuum expectation value.
    """
    state = alpha_negative_product_expansion(Partition([mu]))
    for _ in range(b):
        state = apply_cutjoin(r, state)
    return vev(apply_exp_alpha_one(state))


def vev_spin_single(g: int, mu: Iterable[int], r: int) -> HurwitzValue:
    """Disconnected spin single Hurwitz number from the fermionic vacuum expectation.

    ``2^{1-g} / (b! prod mu_i (r+1)^b) <exp(alpha_1) F_{r+1}^b prod alpha_{-mu_i}>``.

    Args:
        g: Genus.
        mu: Ramification profile.
        r: Even positive parameter of the completed cycles.

    Returns:
        The value, or a structural zero when ``b`` is not a non-negative integer or a part is even.
    """
    query = HurwitzQuery(g=g, r=r, mu=Partition(mu), connected=False)
    reason = query.structural_zero_reason()
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    b = query.branch_points()
    state = alpha_negative_product_expansion(query.mu)
    for _ in range(b):
        state = apply_cutjoin(r, state)
    expectation = vev(apply_exp_alpha_one(state))
    logger.debug(f"fock single {query.label()}: b={b}, vev={expectation}")
    value = (
        Rational(2) ** (1 - g)
        * expectation
        / (factorial(b) * prod(query.mu) * (r + 1) ** b)
    )
    return HurwitzValue.computed(value)


def _double_prefactor_query(
    g: int, mu: Iterable[int], nu: Iterable[int], r: int
) -> tuple[HurwitzQuery, str | None]:
    query = HurwitzQuery.double(g=g, mu=mu, nu=nu, r=r, connected=False)
    return query, query.structural_zero_reason()


def _pair_with_annihilators(mu: Partition, state: CliffordState) -> Rational:
    for part in reversed(mu):
        state = apply_alpha(part, state)
    return vev(state)


def vev_spin_double(g: int, mu: Iterable[int], nu: Iterable[int], r: int) -> HurwitzValue:
    """Disconnected spin double Hurwitz number from the fermionic vacuum expectation.

    ``2^{1-g}/b! <prod alpha_{mu_i}/mu_i (F_{r+1}/(r+1))^b prod alpha_{-nu_j}/nu_j>``.

    Raises:
        ValueError: If ``|mu| != |nu|``.
    """
    query, reason = _double_prefactor_query(g, mu, nu, r)
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    assert query.nu is not None
    b = query.branch_points()
    state = alpha_negative_product_expansion(query.nu)
    for _ in range(b):
        state = apply_cutjoin(r, state).scale(Rational(1, r + 1))
    expectation = _pair_with_annihilators(query.mu, state)
    value = (
        Rational(2) ** (1 - g)
        * expectation
        / (factorial(b) * prod(query.mu) * prod(query.nu))
    )
    return HurwitzValue.computed(value)


def vev_spin_double_diagonal(g: int, mu: Iterable[int], nu: Iterable[int], r: int) -> HurwitzValue:
    """Double numbers through ``prod E_{mu_i}(0) prod Ê_0(z_p) prod E_{-nu_j}(0)``.

    Each ``Ê_0(z_p)`` insertion contributes its ``z_p^{r+1}`` coefficient times ``r!``, which is
    the diagonal extraction that collapses to ``F_{r+1}/(r+1)``.

    Raises:
        ValueError: If ``|mu| != |nu|``.
        ScopeError: If more than two completed cycles are needed.
    """
    query, reason = _double_prefactor_query(g, mu, nu, r)
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    assert query.nu is not None
    b = query.branch_points()
    if b > 2:
        raise ScopeError(f"The diagonal extraction route handles b <= 2, got b = {b}")
    state = CliffordState.vacuum()
    for part in query.nu:
        state = _e_coefficient(-part, 0, state)
    for _ in range(b):
        state = _e_hat_zero_coefficient(r + 1, state).scale(factorial(r))
    for part in reversed(query.mu):
        state = _e_coefficient(part, 0, state)
    value = (
        Rational(2) ** (1 - g)
        * vev(state)
        / (factorial(b) * prod(query.mu) * prod(query.nu))
    )
    return HurwitzValue.computed(value)


def _bivariate_coefficients(
    expression: object, z: object, w: object
) -> dict[tuple[int, int], Rational]:
    poly = Poly(expand(expression), z, w)
    return {key: Rational(c) for key, c in poly.as_dict().items()}


def _commutator_scalar(m: int, n: int, z_order: int) -> dict[tuple[int, int], Rational]:
    """Central term ``1/2 G(z+w) - (-1)^n/2 G(z-w)`` with ``G(u) = sinh(mu/2) coth(u/2)/2``."""
    if m + n != 0 or m == 0:
        return {}
    u = symbols("u")
    z, w = symbols("z w")
    sinh_series = TruncatedSeries.from_function(
        lambda p: Rational(m, 2) ** p / factorial(p) if p % 2 else 0, z_order + 1
    )
    g_series = (sinh_series * coth_half_series(z_order + 1)).scale(Rational(1, 2))
    g_poly = sum(g_series.coefficient(p) * u**p for p in range(z_order + 1))
    expression = Rational(1, 2) * g_poly.subs(u, z + w) - Rational(_sign(n), 2) * g_poly.subs(
        u, z - w
    )
    return {
        key: c
        for key, c in _bivariate_coefficients(expression, z, w).items()
        if sum(key) <= z_order
    }


def _commutator_rhs_weights(
    m: int, n: int, z_order: int
) -> dict[tuple[int, int], list[tuple[int, Rational]]]:
    """For each ``(a, b)``, the list of ``(j, c)`` with RHS ``[z^a w^b] = sum c [u^j] E_{m+n}``."""
    z, w = symbols("z w")
    series = varsigma_series(z_order)

    def varsigma_poly(x: Any) -> Any:
        return sum(series.coefficient(p) * x**p for p in range(1, z_order + 1, 2))

    first = Rational(1, 2) * varsigma_poly(m * w - n * z)
    second = Rational(_sign(n), 2) * varsigma_poly(m * w + n * z)
    weights: dict[tuple[int, int], list[tuple[int, Rational]]] = {}
    for j in range(z_order + 1):
        for factor, shift in ((first, z + w), (second, z - w)):
            if factor == 0:
                continue
            for key, c in _bivariate_coefficients(factor * shift**j, z, w).items():
                if sum(key) <= z_order:
                    weights.setdefault(key, []).append((j, c))
    return weights


def commutator_check(m: int, n: int, z_order: int, state_bound: int) -> bool:
    """Check ``[E_m(z), E_n(w)]`` against its closed commutation relation.

    The right side is ``1/2 varsigma(mw - nz) E_{m+n}(z+w) + (-1)^n/2 varsigma(mw + nz)
    E_{m+n}(z-w)``, where ``E_0`` is ``Ê_0`` plus the scalar ``coth(u/2)/4``. Both sides are
    compared coefficient-wise for total degree ``a + b <= z_order`` on every basis monomial of
    energy at most ``state_bound``.

    Returns:
        True when every coefficient agrees.
    """
    weights = _commutator_rhs_weights(m, n, z_order)
    scalar = _commutator_scalar(m, n, z_order)
    for monomial in basis_monomials(state_bound):
        state = CliffordState.basis(monomial)
        from_n = _operator_coefficients(n, z_order, state)
        from_m = _operator_coefficients(m, z_order, state)
        target = _operator_coefficients(m + n, z_order, state)
        for a in range(z_order + 1):
            for b in range(z_order + 1 - a):
                lhs = _operator_coefficient(m, a, from_n[b])
                lhs = lhs - _operator_coefficient(n, b, from_m[a])
                rhs = state.scale(scalar.get((a, b), 0))
                for j, c in weights.get((a, b), []):
                    rhs = rhs + target[j].scale(c)
                if lhs != rhs:
                    logger.warning(
                        f"Commutator [E_{m}, E_{n}] fails at z^{a} w^{b} on {list(monomial)}"
                    )
                    return False
    return True


def parity_check(m: int, z_order: int, state_bound: int) -> bool:
    """Check ``E_m(-z) = (-1)^{m+1} E_m(z)`` (and ``Ê_0(-z) = -Ê_0(z)`` for ``m = 0``)."""
    for monomial in basis_monomials(state_bound):
        state = CliffordState.basis(monomial)
        for j, image in enumerate(_operator_coefficients(m, z_order, state)):
            if _sign(j) != _sign(m + 1) and not image.is_zero:
                logger.warning(f"Parity of E_{m} fails at z^{j} on {list(monomial)}")
                return False
    return True


def heisenberg_check(max_mode: int, state_bound: int) -> bool:
    """Check ``[alpha_m, alpha_n] = (m/2) delta_{m+n,0}`` for odd ``|m|, |n| <= max_mode``."""
    modes = [k for k in range(-max_mode, max_mode + 1) if k % 2]
    states = [CliffordState.basis(monomial) for monomial in basis_monomials(state_bound)]
    for m in modes:
        for n in modes:
            for state in states:
                lhs = apply_alpha(m, apply_alpha(n, state)) - apply_alpha(n, apply_alpha(m, state))
                expected = state.scale(Rational(m, 2)) if m + n == 0 else CliffordState()
                if lhs != expected:
                    logger.warning(f"[alpha_{m}, alpha_{n}] fails on {state!r}")
                    return False
    return True


def cutjoin_eigenvalue_check(r: int, max_energy: int) -> bool:
    """Check that ``F_{r+1}`` acts on each monomial by ``p_{r+1}`` of its positive indices."""
    for monomial in basis_monomials(max_energy):
        state = CliffordState.basis(monomial)
        eigenvalue = sum(i ** (r + 1) for i in monomial)
        if apply_cutjoin(r, state) != state.scale(eigenvalue):
            return False
    return True

