"""
Witt partition functions and the supertrace formula.

The supertrace of a group element g on a homogeneous component of a graded
Lie superalgebra is recovered from the supertraces of its powers on the
homology (or, for a free algebra, on the generating space) through the Witt
partition function and Möbius inversion.

Documentation and examples are available at <https://gradedlie.readthedocs.io>
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
import logging
import math

from sympy.functions.combinatorial.numbers import mobius
from sympy.ntheory import divisors

from .graded_series import (ConsistencyError, FormalSeries, GradingError, InsufficientData,
                            compare_series, divisor_pairs, sign)

logger = logging.getLogger(__name__)

__all__ = ('PowerTraceTable',
           'DegreePartition',
           'reachable_degrees',
           'enumerate_partitions',
           'witt_partition_function',
           'supertrace',
           'lie_table',
           'log_coefficient',
           'product_side',
           'denominator_check',
           'super_vs_plain',
           'free_lie_supertrace_closed_form',
           'superdimension',
           )


@dataclass(frozen=True)
class PowerTraceTable:
    """
    Supertraces str(gᵏ|V_d) of the powers of one group element.

    Args:
        spec: grading of the degrees
        values: mapping (k, degree) -> exact rational, k >= 1
        period: order of g; powers are reduced modulo it when given
        depth: largest power available when there is no period
            (defaults to the largest power present in values)
        stride: internal, the table of gᵈ reads powers k·d
    """

    spec: object
    values: dict
    period: int = None
    depth: int = None
    stride: int = 1
    support: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        clean = {}
        for (k, d), v in self.values.items():
            if k < 1:
                raise GradingError('powers start at 1, got %d' % k)
            self.spec.check(d, positive=True)
            clean[(int(k), d)] = Fraction(v)
        object.__setattr__(self, 'values', clean)
        if self.depth is None:
            object.__setattr__(self, 'depth', max((k for k, _ in clean), default=0))
        if self.period is not None and self.period < 1:
            raise GradingError('period must be positive')
        degrees = {d for (_, d), v in clean.items() if v != 0}
        object.__setattr__(self, 'support', tuple(sorted(degrees, key=lambda d: d.sort_key())))

    @classmethod
    def constant(cls, spec, values):
        """Table of the identity element from a mapping degree -> supertrace."""
        return cls(spec, {(1, d): v for d, v in values.items()}, period=1)

    @classmethod
    def from_eigenvalues(cls, spec, letters, depth):
        """
        Table of a diagonal action.

        Args:
            spec: the grading
            letters: iterable of (degree, eigenvalue) for a basis of V
            depth: number of powers to tabulate

        Returns:
            PowerTraceTable with str(gᵏ|V_d) = ψ(d)·Σ λᵏ
        """
        values = {}
        for d, lam in letters:
            lam = Fraction(lam)
            for k in range(1, depth + 1):
                values[(k, d)] = values.get((k, d), 0) + sign(spec, d) * lam ** k
        return cls(spec, values, depth=depth)

    def value(self, k, d):
        """Supertrace of gᵏ at degree d."""
        k = k * self.stride
        if self.period is not None:
            k = (k - 1) % self.period + 1
        elif k > self.depth:
            raise InsufficientData('power %d requested but the table stops at %d' % (k, self.depth))
        return self.values.get((k, d), Fraction(0))

    def power(self, d):
        """The table of gᵈ."""
        return replace(self, stride=self.stride * d)

    def plain(self):
        """Ordinary traces on the same grading with every degree made even."""
        values = {(k, d): sign(self.spec, d) * v for (k, d), v in self.values.items()}
        return replace(self, spec=self.spec.with_even_parity(), values=values)


@dataclass(frozen=True)
class DegreePartition:
    """
    A partition s of a degree: a multiset of support degrees summing to target.

    `parts` is a tuple of (degree, multiplicity) pairs.
    """

    parts: tuple
    target: object

    def __post_init__(self):
        parts = self.parts.items() if isinstance(self.parts, dict) else self.parts
        parts = tuple((d, int(m)) for d, m in parts if m)
        if any(m < 0 for _, m in parts):
            raise GradingError('multiplicities must be positive')
        object.__setattr__(self, 'parts', parts)
        total = None
        for d, m in parts:
            total = d.scale(m) if total is None else total + d.scale(m)
        if total != self.target:
            raise GradingError('parts %r do not sum to %r' % (parts, self.target))

    @property
    def size(self):
        """|s|, the number of parts counted with multiplicity."""
        return sum(m for _, m in self.parts)

    def weight_factor(self):
        """(|s|-1)!/s! as an exact rational."""
        den = 1
        for _, m in self.parts:
            den *= math.factorial(m)
        return Fraction(math.factorial(self.size - 1), den)


def reachable_degrees(support, bound):
    """All nonzero sums of support degrees with total weight at most bound."""
    found = set()
    frontier = [d for d in support if d.weight <= bound]
    found.update(frontier)
    while frontier:
        nxt = []
        for d in frontier:
            for e in support:
                s = d + e
                if s.weight <= bound and s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(found, key=lambda d: d.sort_key())


def enumerate_partitions(target, support):
    """
    List the set T(target) of partitions of target into support degrees.

    Depth-first over the support in the given order, multiplicities
    ascending; the remaining Γ-part bounds every multiplicity.

    Args:
        target: degree with nonzero Γ-part
        support: list of degrees with nonzero Γ-part

    Returns:
        list of DegreePartition
    """
    if not any(target.gamma):
        raise GradingError('target %r has zero Γ-part' % (target,))
    for d in support:
        if not any(d.gamma):
            raise GradingError('support degree %r has zero Γ-part' % (d,))
    usable = [d for d in support if all(x <= y for x, y in zip(d.gamma, target.gamma))]
    rank = len(target.gamma)
    # coordinates still reachable from support[i:]
    covered = [set() for _ in range(len(usable) + 1)]
    for i in range(len(usable) - 1, -1, -1):
        covered[i] = covered[i + 1] | {c for c in range(rank) if usable[i].gamma[c]}

    result = []
    chosen = []

    def walk(i, remaining, acc):
        if not any(remaining):
            if acc == target:
                result.append(DegreePartition(tuple(chosen), target))
            return
        if i == len(usable) or any(remaining[c] and c not in covered[i] for c in range(rank)):
            return
        d = usable[i]
        most = min(remaining[c] // d.gamma[c] for c in range(rank) if d.gamma[c])
        for m in range(most + 1):
            if m:
                chosen.append((d, m))
            rest = tuple(r - m * x for r, x in zip(remaining, d.gamma))
            step = d.scale(m) if m else None
            walk(i + 1, rest, acc if step is None else (step if acc is None else acc + step))
            if m:
                chosen.pop()

    walk(0, target.gamma, None)
    logger.debug('%d partitions of %s over %d support degrees', len(result), target, len(usable))
    return result


def witt_partition_function(g, target):
    """
    Evaluate W_g(target) = Σ_{s∈T} (|s|-1)!/s! ∏ str(g|·)^s.

    Args:
        g: PowerTraceTable (its support is the partition alphabet)
        target: degree with nonzero Γ-part

    Returns:
        exact rational
    """
    total = Fraction(0)
    for s in enumerate_partitions(target, list(g.support)):
        term = s.weight_factor()
        for d, m in s.parts:
            term *= g.value(1, d) ** m
            if not term:
                break
        total += term
    return total


def supertrace(g, target):
    """
    Supertrace of g on the component of the Lie superalgebra at target.

    Σ over target = k·(τ,b) of μ(k)/k · W_{gᵏ}(τ,b).

    Args:
        g: PowerTraceTable of str(gᵏ|H) (H = V for a free algebra)
        target: degree with nonzero Γ-part

    Returns:
        exact rational, integral whenever g is the identity (period 1)
    """
    total = Fraction(0)
    for k, quotient in divisor_pairs(g.spec, target):
        mu = int(mobius(k))
        if mu:
            total += Fraction(mu, k) * witt_partition_function(g.power(k), quotient)
    if g.period == 1 and total.denominator != 1:
        raise ConsistencyError('identity supertrace %s at %s is not an integer' % (total, target))
    return total


def lie_table(g, bound):
    """
    Tabulate str(gᵏ|𝔏_d) for every reachable d and k·|d| <= bound.

    Args:
        g: PowerTraceTable of the generating data
        bound: total weight bound

    Returns:
        PowerTraceTable for the Lie superalgebra
    """
    values = {}
    for d in reachable_degrees(g.support, bound):
        for k in range(1, bound // d.weight + 1):
            values[(k, d)] = supertrace(g.power(k), d)
    return PowerTraceTable(g.spec, values, depth=bound)


def log_coefficient(lie, target):
    """Σ over target = k·d of (1/k) str(gᵏ|𝔏_d), which equals W_g(target)."""
    total = Fraction(0)
    for k, quotient in divisor_pairs(lie.spec, target):
        total += Fraction(1, k) * lie.value(k, quotient)
    return total


def product_side(table, bound):
    """
    Expand ∏_d exp(-Σ_k (1/k) str(gᵏ|·_d) E^{k·d}) in the E-basis.

    Args:
        table: PowerTraceTable of the Lie superalgebra
        bound: truncation weight

    Returns:
        FormalSeries in the E-basis
    """
    terms = {}
    for d in table.support:
        for k in range(1, bound // d.weight + 1):
            v = table.value(k, d)
            if v:
                kd = d.scale(k)
                terms[kd] = terms.get(kd, 0) - v / k
    return FormalSeries(table.spec, bound, terms, 'E').exp()


def denominator_check(lie, homology, bound):
    """
    Check the generalized denominator identity to a weight bound.

    Args:
        lie: PowerTraceTable with str(gᵏ|𝔏_d)
        homology: PowerTraceTable with str(g|H_d) (power 1 is used)
        bound: truncation weight

    Returns:
        CheckResult comparing 1 - sch_g H with the product side
    """
    if lie.spec != homology.spec:
        raise GradingError('tables over different gradings')
    rhs = {lie.spec.zero(): 1}
    for d in homology.support:
        rhs[d] = rhs.get(d, 0) - homology.value(1, d)
    expected = FormalSeries(lie.spec, bound, rhs, 'E')
    return compare_series(expected, product_side(lie, bound))


def super_vs_plain(table, target):
    """
    Rebuild a free Lie superalgebra supertrace from ordinary free Lie traces.

    ψ(a)·tr(g|L_(α,a)) + Σ over odd (β,b) with 2(β,b) = (α,a) of tr(g²|L_(β,b)),
    where L is the free Lie algebra on the same space with all degrees even.

    Args:
        table: PowerTraceTable of str(gᵏ|V)
        target: degree with nonzero Γ-part

    Returns:
        exact rational equal to supertrace(table, target)
    """
    spec = table.spec
    plain = table.plain()
    total = sign(spec, target) * supertrace(plain, target)
    for k, half in divisor_pairs(spec, target):
        if k == 2 and sign(spec, half) == -1:
            total += supertrace(plain.power(2), half)
    return total


def free_lie_supertrace_closed_form(n, table):
    """
    Closed form for generators all of Γ-weight one.

    (1/n) Σ_{d|n} μ(d) t_d^{n/d} with t_d = str(gᵈ|V), the supertrace of
    gᵈ on the whole generating space (summed over group components).

    Args:
        n: weight
        table: PowerTraceTable over a rank-one Γ supported in weight one

    Returns:
        exact rational, the supertrace on 𝔏_n summed over group components
    """
    if table.spec.gamma_rank != 1 or any(d.weight != 1 for d in table.support):
        raise GradingError('closed form needs rank-one Γ and generators of weight one')
    total = Fraction(0)
    for d in divisors(n):
        d = int(d)
        t = sum((table.value(d, e) for e in table.support), Fraction(0))
        total += int(mobius(d)) * t ** (n // d)
    return total / n


def superdimension(spec, dims, target):
    """
    Superdimension of a free Lie superalgebra component.

    Args:
        spec: the grading
        dims: mapping generator degree -> dimension
        target: degree with nonzero Γ-part

    Returns:
        integral Fraction sdim 𝔏_target; ConsistencyError otherwise
    """
    table = PowerTraceTable.constant(spec, {d: sign(spec, d) * n for d, n in dims.items()})
    return supertrace(table, target)
