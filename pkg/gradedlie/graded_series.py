"""
Degrees, sign maps and truncated formal series.

A grading is the product of a free commutative semigroup Γ = ℕ^r and a finite
rank abelian group 𝒜 = ℤ/M₁ × ... (a modulus of 0 stands for ℤ).  The sign map
ψ on 𝒜 is fixed by one sign per group generator.  Series live in the group
ring of Γ×𝒜 in one of two bases related by E^(α,a) = ψ(a) e^(α,a).

Documentation and examples are available at <https://gradedlie.readthedocs.io>
"""

from dataclasses import dataclass, field
from fractions import Fraction
import itertools
import math
import re

from sympy.ntheory import divisors

__all__ = ('GradingError',
           'InsufficientData',
           'GuardExceeded',
           'ConsistencyError',
           'GradingSpec',
           'Degree',
           'FormalSeries',
           'CheckResult',
           'to_fraction',
           'format_number',
           'sign',
           'basis_convert',
           'series_exp_log',
           'divisor_pairs',
           'compare_series',
           )


class GradingError(ValueError):
    """A degree, grading or input violates its structural requirements."""


class InsufficientData(LookupError):
    """A table, series or power needed by a formula is not available."""


class GuardExceeded(RuntimeError):
    """An enumeration grew past its configured guard."""


class ConsistencyError(ArithmeticError):
    """A quantity that must come out integral or equal did not."""


_FRACTION_RE = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')


def to_fraction(value):
    """
    Convert an int, Fraction or "p/q" string to an exact Fraction.

    Floats are refused so that no rounding can leak into exact computations.

    Args:
        value: int, Fraction or string such as "-3/4" or "196884"

    Returns:
        the value as a Fraction
    """
    if isinstance(value, bool):
        raise GradingError('booleans are not numbers here')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _FRACTION_RE.match(value)
        if match is None:
            raise GradingError('cannot read %r as an exact rational' % value)
        num, den = match.groups()
        if den is not None and int(den) == 0:
            raise GradingError('zero denominator in %r' % value)
        return Fraction(int(num), int(den) if den else 1)
    raise GradingError('expected int, Fraction or "p/q" string, got %s' % type(value).__name__)


def format_number(value):
    """Render an exact number as a decimal integer string or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


@dataclass(frozen=True, order=True)
class Degree:
    """
    An element (α, a) of Γ×𝒜.

    `gamma` holds the ℕ^r coordinates and `acomp` the residues of the group
    component, reduced modulo `moduli` (a modulus of 0 leaves the entry as an
    arbitrary integer).
    """

    gamma: tuple
    acomp: tuple = ()
    moduli: tuple = field(default=(), repr=False)

    def __post_init__(self):
        gamma = tuple(int(x) for x in self.gamma)
        acomp = tuple(int(x) for x in self.acomp)
        moduli = tuple(int(x) for x in self.moduli) if self.moduli else (0,) * len(acomp)
        if len(moduli) != len(acomp):
            raise GradingError('acomp %r does not match moduli %r' % (acomp, moduli))
        if any(x < 0 for x in gamma):
            raise GradingError('negative Γ-coordinate in %r' % (gamma,))
        acomp = tuple(a % m if m else a for a, m in zip(acomp, moduli))
        object.__setattr__(self, 'gamma', gamma)
        object.__setattr__(self, 'acomp', acomp)
        object.__setattr__(self, 'moduli', moduli)

    @property
    def weight(self):
        """Total Γ-weight, the sum of the semigroup coordinates."""
        return sum(self.gamma)

    def is_zero(self):
        """Return True for the identity element of Γ×𝒜."""
        return not any(self.gamma) and not any(self.acomp)

    def __add__(self, other):
        if not isinstance(other, Degree):
            return NotImplemented
        if len(self.gamma) != len(other.gamma) or self.moduli != other.moduli:
            raise GradingError('cannot add degrees from different gradings')
        return Degree(tuple(x + y for x, y in zip(self.gamma, other.gamma)),
                      tuple(x + y for x, y in zip(self.acomp, other.acomp)),
                      self.moduli)

    def scale(self, k):
        """Return k·(α, a)."""
        return Degree(tuple(k * x for x in self.gamma),
                      tuple(k * x for x in self.acomp),
                      self.moduli)

    def sort_key(self):
        """Key ordering degrees by weight, then coordinates."""
        return (self.weight, self.gamma, self.acomp)


@dataclass(frozen=True)
class GradingSpec:
    """
    Description of the grading semigroup Γ×𝒜 and its sign map ψ.

    Args:
        gamma_rank: number of free generators of Γ
        group_moduli: modulus per 𝒜 coordinate (0 for ℤ)
        parity: value of ψ (+1 or -1) on each 𝒜 generator
    """

    gamma_rank: int
    group_moduli: tuple = ()
    parity: tuple = ()

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.group_moduli)
        parity = tuple(int(p) for p in self.parity)
        object.__setattr__(self, 'group_moduli', moduli)
        object.__setattr__(self, 'parity', parity)
        if int(self.gamma_rank) < 1:
            raise GradingError('gamma_rank must be positive')
        if len(parity) != len(moduli):
            raise GradingError('parity has %d entries but there are %d group moduli'
                               % (len(parity), len(moduli)))
        for m, p in zip(moduli, parity):
            if m < 0:
                raise GradingError('negative group modulus %d' % m)
            if p not in (1, -1):
                raise GradingError('parity entries must be +1 or -1, got %d' % p)
            if m % 2 == 1 and p == -1:
                raise GradingError('an odd modulus %d cannot carry parity -1' % m)

    @classmethod
    def super_grading(cls, gamma_rank=1):
        """Γ = ℕ^r with 𝒜 = ℤ₂ whose generator is odd."""
        return cls(gamma_rank, (2,), (-1,))

    @classmethod
    def trivial(cls, gamma_rank=1):
        """Γ = ℕ^r with trivial 𝒜 (purely even)."""
        return cls(gamma_rank)

    def degree(self, gamma, acomp=None):
        """Build a Degree of this grading, defaulting the group part to zero."""
        if acomp is None:
            acomp = (0,) * len(self.group_moduli)
        gamma = tuple(gamma)
        acomp = tuple(acomp)
        if len(gamma) != self.gamma_rank or len(acomp) != len(self.group_moduli):
            raise GradingError('degree %r;%r does not fit gamma_rank %d with %d group moduli'
                               % (gamma, acomp, self.gamma_rank, len(self.group_moduli)))
        return Degree(gamma, acomp, self.group_moduli)

    def zero(self):
        """The identity degree."""
        return self.degree((0,) * self.gamma_rank)

    def check(self, d, positive=False):
        """
        Verify that d belongs to this grading.

        Args:
            d: the degree
            positive: also require a nonzero Γ-part

        Returns:
            d unchanged
        """
        if (len(d.gamma) != self.gamma_rank or len(d.acomp) != len(self.group_moduli)
                or d.moduli != self.group_moduli):
            raise GradingError('degree %r does not belong to %r' % (d, self))
        if positive and not any(d.gamma):
            raise GradingError('degree %r has zero Γ-part' % (d,))
        return d

    def with_even_parity(self):
        """The same semigroup with every generator made even."""
        return GradingSpec(self.gamma_rank, self.group_moduli, (1,) * len(self.parity))


def sign(spec, d):
    """
    Evaluate the sign map ψ on the group component of a degree.

    Args:
        spec: the grading
        d: a degree of that grading

    Returns:
        +1 or -1
    """
    spec.check(d)
    result = 1
    for p, a in zip(spec.parity, d.acomp):
        if p == -1 and a % 2:
            result = -result
    return result


def _split_by_weight(terms, bound):
    """Group a term mapping into homogeneous components indexed by weight."""
    parts = [dict() for _ in range(bound + 1)]
    for d, c in terms.items():
        parts[d.weight][d] = c
    return parts


def _multiply_parts(a, b, out):
    """Accumulate the product of two homogeneous components into out."""
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            d = d1 + d2
            out[d] = out.get(d, 0) + c1 * c2


@dataclass(frozen=True, eq=False)
class FormalSeries:
    """
    A series in the group ring of Γ×𝒜 truncated at total Γ-weight `bound`.

    Coefficients are exact rationals.  `basis` is 'e' or 'E' and records which
    basis the coefficients refer to.  Instances are immutable; every
    operation returns a new series truncated to the smaller bound.
    """

    spec: GradingSpec
    bound: int
    terms: dict = field(default_factory=dict)
    basis: str = 'E'

    def __post_init__(self):
        if self.basis not in ('e', 'E'):
            raise GradingError("basis must be 'e' or 'E'")
        if self.bound < 0:
            raise GradingError('bound must be nonnegative')
        clean = {}
        for d, c in self.terms.items():
            self.spec.check(d)
            if d.weight <= self.bound and c != 0:
                clean[d] = Fraction(c)
        object.__setattr__(self, 'terms', clean)

    @classmethod
    def one(cls, spec, bound, basis='E'):
        """The multiplicative identity."""
        return cls(spec, bound, {spec.zero(): Fraction(1)}, basis)

    @classmethod
    def monomial(cls, spec, bound, d, coeff=1, basis='E'):
        """A single term coeff·X^d."""
        return cls(spec, bound, {d: Fraction(coeff)}, basis)

    def coefficient(self, d):
        """Coefficient at degree d (zero when absent)."""
        return self.terms.get(d, Fraction(0))

    @property
    def constant_term(self):
        """Coefficient at the identity degree."""
        return self.coefficient(self.spec.zero())

    def truncate(self, bound):
        """Drop every term above the new bound."""
        return FormalSeries(self.spec, min(bound, self.bound), self.terms, self.basis)

    def _compatible(self, other):
        if self.spec != other.spec:
            raise GradingError('series over different gradings')
        if self.basis != other.basis:
            raise GradingError('series in different bases; convert one first')
        return min(self.bound, other.bound)

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return (self.spec == other.spec and self.basis == other.basis
                and self.bound == other.bound and self.terms == other.terms)

    def __hash__(self):
        return hash((self.spec, self.bound, self.basis, frozenset(self.terms.items())))

    def __add__(self, other):
        bound = self._compatible(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, 0) + c
        return FormalSeries(self.spec, bound, terms, self.basis)

    def __neg__(self):
        return FormalSeries(self.spec, self.bound, {d: -c for d, c in self.terms.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FormalSeries(self.spec, self.bound,
                                {d: c * other for d, c in self.terms.items()}, self.basis)
        if not isinstance(other, FormalSeries):
            return NotImplemented
        bound = self._compatible(other)
        left = _split_by_weight(self.truncate(bound).terms, bound)
        right = _split_by_weight(other.truncate(bound).terms, bound)
        terms = {}
        for w1, part1 in enumerate(left):
            if not part1:
                continue
            for w2 in range(bound - w1 + 1):
                if right[w2]:
                    _multiply_parts(part1, right[w2], terms)
        return FormalSeries(self.spec, bound, terms, self.basis)

    __rmul__ = __mul__

    def convert(self):
        """Change basis between e and E (see basis_convert)."""
        return basis_convert(self)

    def exp(self):
        """Truncated exponential; the constant term must vanish."""
        return series_exp_log(self, 'exp')

    def log(self):
        """Truncated logarithm; the constant term must be 1."""
        return series_exp_log(self, 'log')

    def inverse(self):
        """
        Multiplicative inverse up to the bound.

        The weight-zero part must be a nonzero constant at the identity degree.
        """
        parts = _split_by_weight(self.terms, self.bound)
        c0 = self.constant_term
        if c0 == 0 or len(parts[0]) != 1:
            raise GradingError('series is not invertible: weight-zero part %r' % parts[0])
        result = [dict() for _ in parts]
        result[0] = {self.spec.zero(): 1 / c0}
        for w in range(1, self.bound + 1):
            acc = {}
            for j in range(1, w + 1):
                if parts[j] and result[w - j]:
                    _multiply_parts(parts[j], result[w - j], acc)
            result[w] = {d: -c / c0 for d, c in acc.items()}
        terms = {}
        for part in result:
            terms.update(part)
        return FormalSeries(self.spec, self.bound, terms, self.basis)


def basis_convert(s):
    """
    Rewrite a series in the other basis.

    Each coefficient at (α, a) is multiplied by ψ(a); applying the map twice
    returns the original series.

    Args:
        s: a FormalSeries

    Returns:
        the same element expressed in the other basis
    """
    terms = {d: c * sign(s.spec, d) for d, c in s.terms.items()}
    return FormalSeries(s.spec, s.bound, terms, 'e' if s.basis == 'E' else 'E')


def series_exp_log(s, direction):
    """
    Truncated exponential or logarithm over exact rationals.

    Both use the weight derivation D(X^d) = |d| X^d, for which
    D(exp f) = exp(f)·Df, so each homogeneous component follows from lower
    ones without any division other than by the weight.

    Args:
        s: a FormalSeries
        direction: 'exp' (constant term 0) or 'log' (constant term 1)

    Returns:
        exp(s) or log(s) truncated at s.bound
    """
    parts = _split_by_weight(s.terms, s.bound)
    zero = s.spec.zero()
    if direction == 'exp':
        if parts[0]:
            raise GradingError('exp needs a series without weight-zero terms')
        result = [dict() for _ in parts]
        result[0] = {zero: Fraction(1)}
        for w in range(1, s.bound + 1):
            acc = {}
            for j in range(1, w + 1):
                if parts[j] and result[w - j]:
                    scaled = {d: j * c for d, c in parts[j].items()}
                    _multiply_parts(scaled, result[w - j], acc)
            result[w] = {d: c / w for d, c in acc.items()}
    elif direction == 'log':
        if parts[0] != {zero: 1}:
            raise GradingError('log needs constant term 1 and no other weight-zero terms')
        result = [dict() for _ in parts]
        for w in range(1, s.bound + 1):
            acc = {d: w * c for d, c in parts[w].items()}
            for j in range(1, w):
                if result[j] and parts[w - j]:
                    scaled = {d: -j * c for d, c in result[j].items()}
                    _multiply_parts(scaled, parts[w - j], acc)
            result[w] = {d: c / w for d, c in acc.items()}
    else:
        raise GradingError("direction must be 'exp' or 'log', got %r" % (direction,))
    terms = {}
    for part in result:
        terms.update(part)
    return FormalSeries(s.spec, s.bound, terms, s.basis)


def _group_solutions(k, a, modulus):
    """All b in one group coordinate with k·b = a."""
    if modulus == 0:
        return [a // k] if a % k == 0 else []
    return [b for b in range(modulus) if (k * b - a) % modulus == 0]


def divisor_pairs(spec, d):
    """
    Enumerate every way of writing d = k·(τ, b).

    k runs over the divisors of the gcd of the Γ-coordinates; for each k
    every solution b of k·b = a in 𝒜 is listed, so torsion can give several
    solutions or none.

    Args:
        spec: the grading
        d: a degree with nonzero Γ-part

    Returns:
        list of (k, quotient degree) sorted by k
    """
    spec.check(d, positive=True)
    g = 0
    for x in d.gamma:
        g = math.gcd(g, x)
    pairs = []
    for k in divisors(g):
        k = int(k)
        tau = tuple(x // k for x in d.gamma)
        choices = [_group_solutions(k, a, m) for a, m in zip(d.acomp, spec.group_moduli)]
        for b in itertools.product(*choices):
            pairs.append((k, spec.degree(tau, b)))
    return pairs


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of a coefficientwise comparison.

    Truthy exactly when the comparison succeeded; otherwise `discrepancy`
    names the first differing degree (lowest weight) and the two values.
    """

    ok: bool
    discrepancy: object = None
    expected: Fraction = None
    found: Fraction = None

    def __bool__(self):
        return self.ok


def compare_series(expected, found):
    """
    Compare two series coefficientwise up to the smaller bound.

    Args:
        expected: reference FormalSeries
        found: FormalSeries under test, in the same basis

    Returns:
        CheckResult with the minimal-weight discrepancy
    """
    bound = expected._compatible(found)
    keys = set(expected.truncate(bound).terms) | set(found.truncate(bound).terms)
    for d in sorted(keys, key=Degree.sort_key):
        a = expected.coefficient(d)
        b = found.coefficient(d)
        if a != b:
            return CheckResult(False, d, a, b)
    return CheckResult(True)
