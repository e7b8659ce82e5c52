"""
Decomposition of free Lie superalgebras into irreducible gl(k,l)-modules.

The degree-n component of the free Lie superalgebra on the natural
gl(k,l)-module V = V₀ ⊕ V₁ (dim V₀ = k, dim V₁ = l) decomposes into modules
V_λ indexed by (k,l)-hook partitions of n.  The multiplicities c_λ are found
from the coefficients a_{λμ} of S_λ(x)·S_μ(y) in the trace, peeling off
hook Schur functions in decreasing order of |λ₀|.

Documentation and examples are available at <https://gradedlie.readthedocs.io>
"""

from dataclasses import dataclass, field
from fractions import Fraction
import functools
import logging
import math

from sympy.functions.combinatorial.numbers import mobius
from sympy.ntheory import divisors

from .graded_series import (CheckResult, ConsistencyError, GradingError, GuardExceeded,
                            to_fraction)
from .freelie_oracle import DEFAULT_GUARD, SuperAlphabet, graded_trace
from .symfunc import (Partition, hook_partitions, hook_schur, hook_tableaux_count,
                      lr_coefficient, mn_character, partitions_of)

logger = logging.getLogger(__name__)

__all__ = ('HookDecomposition',
           'a_coeff',
           'c_multiplicity',
           'decompose',
           'verify_trace_identity',
           'closed_form_check',
           )

DEFAULT_HOOK_GUARD = 500


@dataclass(frozen=True)
class HookDecomposition:
    """
    Multiplicities c_λ of V_λ in the degree-n free Lie superalgebra component.

    `entries` maps every λ ∈ H(k,l;n) to c_λ, zeros included.
    """

    n: int
    k: int
    l: int
    entries: dict = field(default_factory=dict)

    def multiplicity(self, lam):
        """c_λ (zero outside the hook set)."""
        return self.entries.get(lam, 0)

    def nonzero(self):
        """The entries with c_λ > 0."""
        return {lam: c for lam, c in self.entries.items() if c}

    def dimension(self):
        """Σ c_λ · dim V_λ."""
        return sum(c * hook_tableaux_count(lam, self.k, self.l) for lam, c in self.entries.items() if c)

    def trace(self, x, y):
        """Σ c_λ · HS_λ(x; y) at a rational point."""
        return sum((c * _hook_schur(lam, self.k, self.l).evaluate(x, y)
                    for lam, c in self.entries.items() if c), Fraction(0))


@functools.lru_cache(maxsize=None)
def _hook_schur(lam, k, l):
    return hook_schur(lam, k, l)


def _rectangle(d, size):
    """The cycle type (d^{size/d})."""
    return Partition((d,) * (size // d))


def a_coeff(lam, mu, n):
    """
    Coefficient of S_λ(x)·S_μ(y) in the trace on the degree-n component.

    a_{λμ} = (1/n) Σ_d μ(d) (n/d)!/((|λ|/d)!(|μ|/d)!) (-1)^{(d-1)|μ|/d}
    χ_λ^{(d^{|λ|/d})} χ_μ^{(d^{|μ|/d})}, d running over common divisors of
    |λ| and |μ|.

    Args:
        lam: Partition for the even block
        mu: Partition for the odd block
        n: total weight |λ| + |μ|

    Returns:
        the coefficient as an integral Fraction
    """
    a, b = lam.size, mu.size
    if a + b != n or n < 1:
        raise GradingError('|%s| + |%s| != %d' % (lam, mu, n))
    total = Fraction(0)
    for d in divisors(math.gcd(a, b)):
        d = int(d)
        m = int(mobius(d))
        if not m:
            continue
        count = math.factorial(n // d) // (math.factorial(a // d) * math.factorial(b // d))
        twist = -1 if (d - 1) * (b // d) % 2 else 1
        total += m * count * twist * mn_character(lam, _rectangle(d, a)) * mn_character(mu, _rectangle(d, b))
    total /= n
    if total.denominator != 1:
        raise ConsistencyError('a_{%s,%s} = %s is not an integer' % (lam, mu, total))
    return total


def _closed_form(lam):
    n = lam.size
    total = sum(int(mobius(d)) * mn_character(lam, _rectangle(int(d), n)) for d in divisors(n))
    if total % n:
        raise ConsistencyError('closed form for %s is not integral' % lam)
    return total // n


@functools.lru_cache(maxsize=None)
def _recursive(lam, k, l):
    n = lam.size
    lam0, lam1 = lam.split(k)
    c = a_coeff(lam0, lam1, n)
    conj0 = lam0.conjugate()
    for mu in hook_partitions(k, l, n):
        mu0, _ = mu.split(k)
        if mu0.size <= lam0.size:
            continue
        n_coeff = lr_coefficient(mu.conjugate(), conj0, lam1)
        if n_coeff:
            c -= _recursive(mu, k, l) * n_coeff
    if c < 0 or c.denominator != 1:
        raise ConsistencyError('c_%s = %s for (k,l) = (%d,%d)' % (lam, c, k, l))
    return int(c)


def c_multiplicity(lam, k, l):
    """
    Multiplicity c_λ of V_λ in the free Lie superalgebra component of weight |λ|.

    Partitions with at most k rows use (1/n) Σ_{d|n} μ(d) χ_λ^{(dⁿᐟᵈ)}.
    Otherwise λ splits into λ₀ (first k rows) and λ₁ (conjugate of the rest)
    and c_λ = a_{λ₀λ₁} - Σ c_μ N^{μ′}_{λ₀′λ₁} over hook μ with |μ₀| > |λ₀|.

    Args:
        lam: a (k,l)-hook Partition
        k: dimension of the even part
        l: dimension of the odd part

    Returns:
        nonnegative integer
    """
    if lam.size < 1:
        raise GradingError('c_λ needs a nonempty partition')
    if not lam.is_hook(k, l):
        raise GradingError('%s is not a (%d,%d)-hook partition' % (lam, k, l))
    if lam.length <= k:
        return _closed_form(lam)
    return _recursive(lam, k, l)


def decompose(k, l, n, guard=DEFAULT_HOOK_GUARD):
    """
    All multiplicities c_λ over H(k,l;n).

    Args:
        k: dimension of the even part
        l: dimension of the odd part
        n: weight
        guard: largest number of hook partitions accepted

    Returns:
        HookDecomposition
    """
    if n < 1:
        raise GradingError('weight must be positive')
    hooks = hook_partitions(k, l, n)
    if len(hooks) > guard:
        raise GuardExceeded('%d hook partitions of %d, guard is %d' % (len(hooks), n, guard))
    hooks.sort(key=lambda lam: -lam.split(k)[0].size)
    logger.debug('decomposing weight %d for gl(%d,%d): %d hook partitions', n, k, l, len(hooks))
    entries = {lam: c_multiplicity(lam, k, l) for lam in hooks}
    return HookDecomposition(n, k, l, entries)


def verify_trace_identity(k, l, n, points, guard=DEFAULT_GUARD):
    """
    Compare Σ c_λ HS_λ(x; y) with a brute-force trace.

    The oracle gives supertraces per parity; the ordinary trace is their
    ψ-weighted sum.

    Args:
        k: number of even generators
        l: number of odd generators
        n: weight
        points: iterable of (x, y) eigenvalue tuples of lengths k and l
        guard: oracle guard

    Returns:
        CheckResult, truthy when every point agrees; discrepancy is the point
    """
    decomposition = decompose(k, l, n)
    for x, y in points:
        x = tuple(to_fraction(v) for v in x)
        y = tuple(to_fraction(v) for v in y)
        if len(x) != k or len(y) != l:
            raise GradingError('point (%r; %r) does not fit gl(%d,%d)' % (x, y, k, l))
        alphabet = SuperAlphabet.standard(x, y)
        spec = alphabet.spec
        found = sum(sign * graded_trace(alphabet, spec.degree((n,), (a,)), guard)
                    for a, sign in ((0, 1), (1, -1)))
        expected = decomposition.trace(x, y)
        if expected != found:
            return CheckResult(False, (x, y), expected, found)
    return CheckResult(True)


def closed_form_check(max_weight, l=1, max_rows=3):
    """
    Compare the correction-sum recursion with the closed form.

    Every λ with at most max_rows rows and |λ| <= max_weight is treated as a
    (l(λ), l)-hook partition, where both routes apply.

    Returns:
        CheckResult; the discrepancy is the first disagreeing partition
    """
    for n in range(1, max_weight + 1):
        for lam in partitions_of(n):
            if lam.length > max_rows:
                continue
            closed = _closed_form(lam)
            recursive = _recursive(lam, lam.length, l)
            if closed != recursive:
                return CheckResult(False, lam, closed, recursive)
    return CheckResult(True)
