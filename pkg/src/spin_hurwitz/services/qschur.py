"""Schur Q-functions, characters and central characters of the Sergeev group.

The algebra Gamma is handled in the power-sum basis (:class:`GammaElement`). Schur
Q-functions are Pfaffians of the two-index functions ``Q_{n,m}``; characters are read off
their power-sum coefficients,

    zeta^lambda_mu = z_mu 2^{-floor(l(lambda)/2)} [p_mu] Q_lambda,

and restricted products keep only the monomials dividing ``p_mu`` so that a single
character never pays for the full expansion of ``Q_lambda``.
"""

from functools import lru_cache
from math import factorial, prod
from threading import Lock

from sympy import Rational, binomial

from spin_hurwitz.config import CACHE_SIZE
from spin_hurwitz.models.gamma import GammaElement
from spin_hurwitz.models.partition import Partition, PartitionClass, ones
from spin_hurwitz.services.partitions import enumerate_partitions, z_factor


class QPairTable:
    """Memo of the one-variable functions ``q_n`` and the pairs ``Q_{n,m}``.

    ``q_n`` is the degree-n part of ``exp(2 sum_{k odd} p_k z^k / k)`` and

        Q_{n,m} = q_n q_m + 2 sum_{k=1}^{m} (-1)^k q_{n+k} q_{m-k},

    the ``z^n w^m`` coefficient of ``(Q(z)Q(w) - 1)(z - w)/(z + w)`` expanded in ``w/z``.
    Entries are built on demand and shared between threads.

    Attributes:
        max_degree (int): Largest ``n + m`` built so far.
        entries (dict[tuple[int, int], GammaElement]): Built ``Q_{n,m}`` values.
    """

    def __init__(self) -> None:
        """Start with ``q_0 = 1`` and no pairs."""
        self._q: list[GammaElement] = [GammaElement.one()]
        self.entries: dict[tuple[int, int], GammaElement] = {}
        self.max_degree = 0
        self._lock = Lock()

    def q(self, n: int) -> GammaElement:
        """Return ``q_n`` (zero for negative ``n``)."""
        if n < 0:
            return GammaElement()
        with self._lock:
            while len(self._q) <= n:
                k = len(self._q)
                total = GammaElement()
                for j in range(1, k + 1, 2):
                    total = total + GammaElement.power_sum(j) * self._q[k - j]
                self._q.append(total.scale(Rational(2, k)))
            return self._q[n]

    def entry(self, n: int, m: int) -> GammaElement:
        """Return ``Q_{n,m}`` for ``n, m >= 0``.

        Raises:
            ValueError: If an index is negative.
        """
        if n < 0 or m < 0:
            raise ValueError(f"Q_(n,m) needs n, m >= 0, got ({n}, {m})")
        key = (n, m)
        if key in self.entries:
            return self.entries[key]
        if n == 0 and m == 0:
            value = GammaElement()
        else:
            value = self.q(n) * self.q(m)
            for k in range(1, m + 1):
                value = value + (self.q(n + k) * self.q(m - k)).scale(2 * (-1) ** k)
        with self._lock:
            self.entries[key] = value
            self.max_degree = max(self.max_degree, n + m)
        return value

    def build(self, max_degree: int) -> None:
        """Eagerly fill every entry with ``n + m <= max_degree``."""
        for total in range(max_degree + 1):
            for n in range(total + 1):
                self.entry(n, total - n)


_TABLE = QPairTable()


def q_pair(n: int, m: int) -> GammaElement:
    """Return the two-index function ``Q_{n,m}`` (homogeneous of degree ``n + m``)."""
    return _TABLE.entry(n, m)


def _require_strict(lam: Partition) -> None:
    if not lam.is_strict:
        raise ValueError(f"Expected a strict partition, got {lam!r}")


def q_matrix(lam: Partition) -> list[list[GammaElement]]:
    """Antisymmetric matrix ``(Q_{lambda_j, lambda_k})``, a zero part appended for odd length."""
    lam = Partition(lam)
    _require_strict(lam)
    parts = list(lam) + ([0] if lam.length % 2 else [])
    return [
        [GammaElement() if j == k else q_pair(a, b) for k, b in enumerate(parts)]
        for j, a in enumerate(parts)
    ]


@lru_cache(maxsize=CACHE_SIZE)
def _pfaffian(parts: tuple[int, ...], within: Partition | None) -> GammaElement:
    if not parts:
        return GammaElement.one()
    first, rest = parts[0], parts[1:]
    total = GammaElement()
    for j, other in enumerate(rest):
        minor = _pfaffian(rest[:j] + rest[j + 1 :], within)
        if minor.is_zero:
            continue
        entry = q_pair(first, other)
        if within is not None:
            entry = entry.restrict(within)
        term = entry.multiply(minor, within)
        total = total + (term if j % 2 == 0 else -term)
    return total


def schur_q(lam: Partition, within: Partition | None = None) -> GammaElement:
    """Schur Q-function ``Q_lambda`` as the Pfaffian of :func:`q_matrix`.

    Args:
        lam: A strict partition.
        within: If given, only the monomials ``p_nu`` with ``nu`` contained in it are computed.

    Returns:
        ``Q_lambda`` (or its restriction).

    Raises:
        ValueError: If ``lam`` is not strict.
    """
    lam = Partition(lam)
    _require_strict(lam)
    if within is not None:
        within = Partition(within)
    parts = tuple(lam) + ((0,) if lam.length % 2 else ())
    return _pfaffian(parts, within)


def half_substitution(element: GammaElement) -> GammaElement:
    """Apply ``p_k -> p_k / 2``, turning ``Q_lambda(p)`` into ``Q_lambda(p/2)``."""
    return element.substitute_scaled(Rational(1, 2))


def _check_character_args(lam: Partition, mu: Partition) -> None:
    _require_strict(lam)
    if not mu.is_odd:
        raise ValueError(f"Characters are indexed by odd partitions, got {mu!r}")


def character(lam: Partition, mu: Partition) -> int:
    """Character ``zeta^lambda_mu`` of the Sergeev group.

    Args:
        lam: Strict partition labelling the supermodule.
        mu: Odd partition labelling the class, of the same size.

    Returns:
        The integer character value.

    Raises:
        ValueError: On wrong classes or a size mismatch.
        ArithmeticError: If the extracted value is not an integer.
    """
    return _character(Partition(lam), Partition(mu))


@lru_cache(maxsize=CACHE_SIZE)
def _character(lam: Partition, mu: Partition) -> int:
    _check_character_args(lam, mu)
    if lam.size != mu.size:
        raise ValueError(f"Size mismatch: |{lam!r}| = {lam.size}, |{mu!r}| = {mu.size}")
    coefficient = schur_q(lam, within=mu).coefficient(mu)
    value = z_factor(mu) * coefficient / 2 ** (lam.length // 2)
    if value.q != 1:
        raise ArithmeticError(f"Non-integral character zeta^{lam!r}_{mu!r} = {value}")
    return int(value)


def dim_v(lam: Partition) -> int:
    """Dimension ``zeta^lambda_(1^d)`` of the Sergeev supermodule."""
    return character(lam, ones(sum(lam)))


def dim_v_closed(lam: Partition) -> int:
    """Closed product formula for :func:`dim_v`.

    ``2^{d - floor(l/2)} d!/prod(lambda_i!)`` times
    ``prod_{i<j} (lambda_i - lambda_j)/(lambda_i + lambda_j)``.
    """
    lam = Partition(lam)
    _require_strict(lam)
    d = lam.size
    value = Rational(2 ** (d - lam.length // 2) * factorial(d), prod(factorial(p) for p in lam))
    for i, a in enumerate(lam):
        for b in lam[i + 1 :]:
            value *= Rational(a - b, a + b)
    if value.q != 1:
        raise ArithmeticError(f"Non-integral dimension for {lam!r}: {value}")
    return int(value)


def central_character(lam: Partition, mu: Partition) -> Rational:
    """Central character ``f^lambda_mu``, extended to ``|mu| <= |lambda|`` by padding with ones.

    For ``|mu| = |lambda| = d`` this is ``zeta 2^d d! / (2^{l(mu)} z_mu dim V^lambda)``; for
    smaller ``mu`` it is ``binom(m_1(mu) + k, k) f^lambda_{mu + (1^k)}``; for larger ``mu`` zero.
    """
    lam, mu = Partition(lam), Partition(mu)
    _check_character_args(lam, mu)
    d = lam.size
    if mu.size > d:
        return Rational(0)
    if mu.size < d:
        k = d - mu.size
        padded = mu.union([1] * k)
        return binomial(mu.multiplicities.get(1, 0) + k, k) * central_character(lam, padded)
    return Rational(
        character(lam, mu) * 2**d * factorial(d),
        2**mu.length * z_factor(mu) * dim_v_closed(lam),
    )


def scalar_product(a: GammaElement, b: GammaElement) -> Rational:
    """Bilinear pairing with ``<p_mu, p_nu> = 2^{-l(mu)} z_mu delta_{mu,nu}``."""
    total = Rational(0)
    for mu, c in a.terms.items():
        other = b.terms.get(mu)
        if other is not None:
            total += c * other * Rational(z_factor(mu), 2**mu.length)
    return total


def character_table(d: int) -> dict[tuple[Partition, Partition], int]:
    """All characters ``zeta^lambda_mu`` for strict ``lambda`` and odd ``mu`` of size ``d``."""
    return {
        (lam, mu): character(lam, mu)
        for lam in enumerate_partitions(d, PartitionClass.STRICT)
        for mu in enumerate_partitions(d, PartitionClass.ODD)
    }
