"""
Monstrous Lie superalgebras attached to normalized q-series.

A normalized q-series F = q⁻¹ + Σ_{n≥1} f(n)qⁿ determines a Borcherds-Cartan
superalgebra on the index set {-1, 1, 2, ...} with matrix (-(i+j)); its root
spaces are graded by II₁,₁ and their supertraces follow from the Witt
partition function or, for replicable F, from the replicates directly.

Documentation and examples are available at <https://gradedlie.readthedocs.io>
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
import importlib.resources
import json
import logging
import math

from sympy import divisor_sigma
from sympy.functions.combinatorial.numbers import mobius
from sympy.ntheory import divisors

from .graded_series import (CheckResult, ConsistencyError, FormalSeries, GradingError,
                            GradingSpec, InsufficientData, compare_series)
from .gkm import BorcherdsCartanData, free_generator_table, gkm_supertrace_free_case
from .witt_engine import PowerTraceTable, supertrace

logger = logging.getLogger(__name__)

__all__ = ('QSeries',
           'ReplicateFamily',
           'faber_polynomial',
           'faber_check',
           'replicability_check',
           'monstrous_table',
           'monstrous_supertrace',
           'monstrous_supertrace_replicable',
           'j_coefficients',
           'load_j_series',
           'monstrous_data',
           'gkm_cross_check',
           )


@dataclass(frozen=True)
class QSeries:
    """
    A normalized q-series q⁻¹ + f(1)q + f(2)q² + ... known to a finite depth.

    `coefficients` holds f(1), ..., f(depth) as integers.
    """

    coefficients: tuple = ()
    name: str = field(default='F', compare=False)

    def __post_init__(self):
        coefficients = []
        for c in self.coefficients:
            value = Fraction(c) if not isinstance(c, str) else Fraction(int(c.strip()))
            if value.denominator != 1:
                raise GradingError('q-series coefficients must be integers, got %s' % value)
            coefficients.append(int(value))
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def from_mapping(cls, values, name='F'):
        """
        Build from a mapping exponent -> coefficient.

        The entries at -1 and 0, when present, must be 1 and 0; missing
        exponents between 1 and the largest one are zero.
        """
        values = {int(k): int(v) for k, v in values.items()}
        if values.pop(-1, 1) != 1:
            raise GradingError('a normalized q-series has f(-1) = 1')
        if values.pop(0, 0) != 0:
            raise GradingError('a normalized q-series has f(0) = 0')
        if any(k < -1 for k in values):
            raise GradingError('exponents below -1 are not allowed')
        depth = max(values, default=0)
        return cls(tuple(values.get(n, 0) for n in range(1, depth + 1)), name)

    @property
    def depth(self):
        """Largest n with f(n) known."""
        return len(self.coefficients)

    def f(self, n):
        """The coefficient of qⁿ."""
        if n == -1:
            return 1
        if n == 0:
            return 0
        if n < -1:
            raise GradingError('exponent %d is below -1' % n)
        if n > self.depth:
            raise InsufficientData('f(%d) requested but %s is known to depth %d' % (n, self.name, self.depth))
        return self.coefficients[n - 1]

    def with_coefficient(self, n, value):
        """A copy with f(n) replaced."""
        coefficients = list(self.coefficients)
        coefficients[n - 1] = value
        return QSeries(tuple(coefficients), self.name)


@dataclass(frozen=True)
class ReplicateFamily:
    """
    The replicates F^(a), a >= 1, of a normalized q-series.

    Either every replicate is listed in `members`, or `default` stands in for
    the missing ones (as when all replicates coincide with F).
    """

    members: dict = field(default_factory=dict)
    default: QSeries = None

    def __post_init__(self):
        if 1 not in self.members and self.default is None:
            raise GradingError('a replicate family needs F^(1)')

    @classmethod
    def constant(cls, series):
        """The family with F^(a) = F for all a."""
        return cls({}, series)

    def replicate(self, a):
        """F^(a)."""
        if a in self.members:
            return self.members[a]
        if self.default is None:
            raise InsufficientData('replicate F^(%d) is not available' % a)
        return self.default


def _laurent_powers(series, m):
    """
    F⁰, F¹, ..., Fᵐ as dictionaries exponent -> integer, truncated above q⁰.
    """
    needed = max(m - 1, 0)
    if series.depth < needed:
        raise InsufficientData('Faber polynomial P_%d needs depth %d, %s has %d'
                               % (m, needed, series.name, series.depth))
    base = {-1: 1}
    for n in range(1, needed + 1):
        if series.f(n):
            base[n] = series.f(n)
    powers = [{0: 1}]
    for _ in range(m):
        prev = powers[-1]
        out = {}
        for e1, c1 in prev.items():
            for e2, c2 in base.items():
                e = e1 + e2
                if e <= 0:
                    out[e] = out.get(e, 0) + c1 * c2
        powers.append({e: c for e, c in out.items() if c})
    return powers


def faber_polynomial(series, m):
    """
    The Faber polynomial P_m with P_m(F) ≡ q^{-m} mod qℤ[[q]].

    Starting from tᵐ, the lowest offending power of q is cancelled by the
    matching power of F until only q^{-m} is left below q¹.

    Args:
        series: QSeries
        m: positive degree

    Returns:
        list of integer coefficients [c₀, c₁, ..., c_m] of P_m(t) = Σ c_k tᵏ
    """
    if m < 1:
        raise GradingError('Faber polynomials start at degree 1')
    powers = _laurent_powers(series, m)
    poly = [0] * (m + 1)
    poly[m] = 1
    value = dict(powers[m])
    for e in range(-(m - 1), 1):
        c = value.get(e, 0)
        if c:
            k = -e
            poly[k] -= c
            for e2, c2 in powers[k].items():
                value[e2] = value.get(e2, 0) - c * c2
    return poly


def faber_check(series, m, poly=None):
    """
    Check P(F) ≡ q^{-m} mod qℤ[[q]] for a candidate polynomial.

    Args:
        series: QSeries
        m: degree
        poly: coefficient list (faber_polynomial(series, m) when omitted)

    Returns:
        CheckResult; the discrepancy is the offending exponent
    """
    if poly is None:
        poly = faber_polynomial(series, m)
    powers = _laurent_powers(series, len(poly) - 1)
    value = {}
    for k, c in enumerate(poly):
        for e, c2 in powers[k].items():
            value[e] = value.get(e, 0) + c * c2
    for e in range(-max(m, len(poly) - 1), 1):
        expected = 1 if e == -m else 0
        if value.get(e, 0) != expected:
            return CheckResult(False, e, Fraction(expected), Fraction(value.get(e, 0)))
    return CheckResult(True)


def replicability_check(family, box_bound):
    """
    Compare both sides of the replication product identity.

    ∏ exp(-Σ_k (1/k) f^(k)(mn) p^{km} q^{kn}) against 1 - Σ f(i+j-1) pⁱqʲ,
    coefficientwise for i + j <= box_bound.

    Args:
        family: ReplicateFamily
        box_bound: largest total degree in p and q

    Returns:
        CheckResult; the discrepancy is the lowest (i, j) degree that fails
    """
    spec = GradingSpec.trivial(2)
    f = family.replicate(1)
    log_terms = {}
    for k in range(1, box_bound // 2 + 1):
        replicate = family.replicate(k)
        for m in range(1, box_bound // k):
            for n in range(1, box_bound // k - m + 1):
                d = spec.degree((k * m, k * n))
                log_terms[d] = log_terms.get(d, 0) - Fraction(replicate.f(m * n), k)
    product = FormalSeries(spec, box_bound, log_terms, 'e').exp()
    rhs = {spec.zero(): 1}
    for i in range(1, box_bound):
        for j in range(1, box_bound - i + 1):
            rhs[spec.degree((i, j))] = -f.f(i + j - 1)
    return compare_series(FormalSeries(spec, box_bound, rhs, 'e'), product)


def _family_member(family, k):
    if isinstance(family, QSeries):
        return family
    if isinstance(family, Mapping):
        if k not in family:
            raise InsufficientData('F_{g^%d} is not supplied' % k)
        return family[k]
    raise GradingError('expected a QSeries or a mapping k -> QSeries')


def monstrous_table(family, powers, bound):
    """
    Supertraces str(gᵏ|H_(i,j)) = f_{gᵏ}(i+j-1) over II₁,₁ for the given powers.

    Args:
        family: QSeries (g = 1) or mapping k -> QSeries F_{gᵏ}
        powers: the powers k to tabulate
        bound: largest total degree i + j (for k = 1)

    Returns:
        PowerTraceTable over Γ = ℕ²
    """
    spec = GradingSpec.trivial(2)
    values = {}
    for k in powers:
        series = _family_member(family, k)
        for i in range(1, bound // k):
            for j in range(1, bound // k - i + 1):
                v = series.f(i + j - 1)
                if v:
                    values[(k, spec.degree((i, j)))] = v
    if isinstance(family, QSeries):
        return PowerTraceTable(spec, values, period=1)
    return PowerTraceTable(spec, values, depth=max(powers))


def monstrous_supertrace(m, n, family):
    """
    str(g|𝔏(F)_(m,n)) as a Möbius sum of Witt partition functions over II₁,₁.

    Args:
        m: positive integer
        n: positive integer
        family: QSeries for g = 1, or mapping k -> QSeries F_{gᵏ} (the
            powers dividing gcd(m, n) are used)

    Returns:
        the supertrace as an integral Fraction
    """
    if m < 1 or n < 1:
        raise GradingError('(m, n) must be positive, got (%d, %d)' % (m, n))
    powers = [1] if isinstance(family, QSeries) else [int(k) for k in divisors(math.gcd(m, n))]
    table = monstrous_table(family, powers, m + n)
    value = supertrace(table, table.spec.degree((m, n)))
    if value.denominator != 1:
        raise ConsistencyError('supertrace at (%d, %d) is %s' % (m, n, value))
    return value


def monstrous_supertrace_replicable(m, n, replicates):
    """
    Σ over ad | (m, n) of μ(d)/(ad) · f^(a)_{gᵈ}(mn/(ad)²).

    Args:
        m: positive integer
        n: positive integer
        replicates: ReplicateFamily for g = 1, or mapping d -> ReplicateFamily
            of F_{gᵈ}

    Returns:
        exact rational
    """
    if m < 1 or n < 1:
        raise GradingError('(m, n) must be positive, got (%d, %d)' % (m, n))
    total = Fraction(0)
    for e in divisors(math.gcd(m, n)):
        e = int(e)
        for d in divisors(e):
            d = int(d)
            mu = int(mobius(d))
            if not mu:
                continue
            a = e // d
            if isinstance(replicates, ReplicateFamily):
                family = replicates
            elif d in replicates:
                family = replicates[d]
            else:
                raise InsufficientData('replicates of F_{g^%d} are not supplied' % d)
            total += Fraction(mu, e) * family.replicate(a).f(m * n // (e * e))
    return total


def _integer_inverse(series, depth):
    out = [0] * (depth + 1)
    out[0] = 1
    for n in range(1, depth + 1):
        out[n] = -sum(series[k] * out[n - k] for k in range(1, n + 1))
    return out


def _integer_product(a, b, depth):
    out = [0] * (depth + 1)
    for i, x in enumerate(a[:depth + 1]):
        if x:
            for j in range(depth + 1 - i):
                out[i + j] += x * b[j]
    return out


def j_coefficients(depth):
    """
    Coefficients c(1), ..., c(depth) of J = j - 744 from j = E₄³/Δ.

    E₄ = 1 + 240 Σ σ₃(n)qⁿ and Δ = q ∏(1 - qⁿ)²⁴, expanded with exact
    integers.

    Returns:
        list of Python integers
    """
    size = depth + 1
    e4 = [1] + [240 * int(divisor_sigma(n, 3)) for n in range(1, size + 1)]
    e4_cubed = _integer_product(_integer_product(e4, e4, size), e4, size)
    eta = [1] + [0] * size
    for n in range(1, size + 1):
        factor = [1] + [0] * size
        factor[n] = -1
        for _ in range(24):
            eta = _integer_product(eta, factor, size)
    quotient = _integer_product(e4_cubed, _integer_inverse(eta, size), size)
    # q·j = quotient, so c(n) sits at index n + 1
    return quotient[2:size + 1]


def load_j_series():
    """
    The shipped coefficients of J(q) = j(q) - 744 as a QSeries.

    Returns:
        QSeries with f(1..8)
    """
    text = importlib.resources.files('gradedlie').joinpath('data').joinpath('j.json').read_text()
    payload = json.loads(text)
    start = int(payload.get('start', -1))
    return QSeries.from_mapping({start + i: int(c) for i, c in enumerate(payload['coeffs'])},
                                payload.get('name', 'J'))


def monstrous_data(series, max_index):
    """
    Borcherds-Cartan data of the Monstrous Lie superalgebra of F.

    Indices -1, 1, ..., max_index (those with f(i) = 0 are dropped), matrix
    a_ij = -(i+j), charge |f(i)| and parity sign(f(i)).

    Returns:
        BorcherdsCartanData
    """
    labels = [-1] + [i for i in range(1, max_index + 1) if series.f(i)]
    matrix = tuple(tuple(-(i + j) for j in labels) for i in labels)
    charge = tuple(1 if i == -1 else abs(series.f(i)) for i in labels)
    parity = tuple(1 if i == -1 or series.f(i) > 0 else -1 for i in labels)
    return BorcherdsCartanData(tuple(labels), matrix, (1,) * len(labels), charge, parity)


def _fiber(data, m, n):
    """Fine degrees Σ k_i α_i mapping to (m, n) under α₋₁ ↦ (1,-1), α_i ↦ (1,i)."""
    imaginary = [(pos, data.indices[pos]) for pos in range(1, data.size)]
    found = []
    coeffs = [0] * data.size

    def walk(idx, parts, total):
        if parts == 0:
            if total == 0:
                found.append(tuple(coeffs))
            return
        for j in range(idx, len(imaginary)):
            pos, label = imaginary[j]
            if label > total:
                break
            coeffs[pos] += 1
            walk(j, parts - 1, total - label)
            coeffs[pos] -= 1

    for k_real in range(m):
        coeffs[0] = k_real
        walk(0, m - k_real, n + k_real)
    coeffs[0] = 0
    return found


def gkm_cross_check(series, box):
    """
    Compare monstrous_supertrace with fine-degree free-case supertraces.

    For m + n <= box, the free-case supertraces on the Monstrous data
    (J = {-1}) are summed over the fine degrees above (m, n).

    Args:
        series: QSeries with depth at least box - 1
        box: largest m + n

    Returns:
        CheckResult; the discrepancy is the failing (m, n)
    """
    data = monstrous_data(series, box - 1)
    table = free_generator_table(data, (-1,), box)
    for total in range(2, box + 1):
        for m in range(1, total):
            n = total - m
            expected = monstrous_supertrace(m, n, series)
            found = sum((gkm_supertrace_free_case(data, (-1,), data.degree(gamma), table)
                         for gamma in _fiber(data, m, n)), Fraction(0))
            logger.debug('(%d, %d): %s against %s', m, n, expected, found)
            if expected != found:
                return CheckResult(False, (m, n), expected, found)
    return CheckResult(True)
