"""
Generalized Kac-Moody superalgebras.

Borcherds-Cartan data with a parity coloring, the Weyl-Kac-Borcherds sum
side, denominator identity checks and supertrace formulas for the negative
part 𝔤₋ relative to a set J of real even indices.

Series are written in the coordinates γ ∈ Q⁺ of the exponent e^{-γ} (for
characters, e^{Λ-γ}); the group component of a degree is the odd height of γ.

Documentation and examples are available at <https://gradedlie.readthedocs.io>
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
import logging
import math

import numpy as np

from .graded_series import (FormalSeries, GradingError, GradingSpec, GuardExceeded,
                            compare_series, sign, to_fraction)
from .witt_engine import PowerTraceTable, product_side, supertrace

logger = logging.getLogger(__name__)

__all__ = ('BorcherdsCartanData',
           'SupportEntry',
           'ImaginarySupportSet',
           'WeylElement',
           'FlaggedValue',
           'validate',
           'dominant_check',
           'imaginary_support',
           'enumerate_weyl',
           'weyl_sum_side',
           'irreducible_character',
           'denominator_check',
           'finite_positive_roots',
           'module_character',
           'free_generator_table',
           'kostant_homology_table',
           'gkm_supertrace_free_case',
           'gkm_supertrace_conjectural',
           )

DEFAULT_WEYL_CAP = 100000


def _symmetrizers(matrix):
    """Solve s_i a_ij = s_j a_ji component by component, s = 1 at each root."""
    n = len(matrix)
    s = [None] * n
    for start in range(n):
        if s[start] is not None:
            continue
        s[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or s[j] is not None or matrix[i][j] == 0 or matrix[j][i] == 0:
                    continue
                s[j] = s[i] * matrix[i][j] / matrix[j][i]
                queue.append(j)
    return tuple(s)


@dataclass(frozen=True)
class BorcherdsCartanData:
    """
    A Borcherds-Cartan matrix with charges and a parity per index.

    Args:
        indices: labels of the simple roots, in matrix order
        matrix: rows of exact rationals (ints, Fractions or "p/q" strings)
        symmetrizers: s_i > 0 with diag(s)·A symmetric; solved for when omitted
        charge: multiplicities m_i of the simple roots (default all 1)
        parity: +1 (even) or -1 (odd) per index (default all even)
    """

    indices: tuple
    matrix: tuple
    symmetrizers: tuple = None
    charge: tuple = None
    parity: tuple = None

    def __post_init__(self):
        indices = tuple(self.indices)
        n = len(indices)
        matrix = tuple(tuple(to_fraction(x) for x in row) for row in self.matrix)
        object.__setattr__(self, 'indices', indices)
        object.__setattr__(self, 'matrix', matrix)
        if self.symmetrizers is None:
            sym = _symmetrizers(matrix) if all(len(row) == n for row in matrix) and len(matrix) == n else (1,) * n
        else:
            sym = self.symmetrizers
        object.__setattr__(self, 'symmetrizers', tuple(to_fraction(x) for x in sym))
        object.__setattr__(self, 'charge', tuple(int(m) for m in (self.charge or (1,) * n)))
        object.__setattr__(self, 'parity', tuple(int(p) for p in (self.parity or (1,) * n)))

    @property
    def size(self):
        """Number of simple roots."""
        return len(self.indices)

    def position(self, label):
        """Matrix position of an index label."""
        try:
            return self.indices.index(label)
        except ValueError:
            raise GradingError('unknown index %r' % (label,)) from None

    @property
    def real(self):
        """Positions with a_ii = 2."""
        return tuple(i for i in range(self.size) if self.matrix[i][i] == 2)

    @property
    def imaginary(self):
        """Positions with a_ii <= 0."""
        return tuple(i for i in range(self.size) if self.matrix[i][i] != 2)

    @property
    def odd(self):
        """Positions of odd simple roots."""
        return tuple(i for i in range(self.size) if self.parity[i] == -1)

    def form(self, i, j):
        """(α_i|α_j) = s_i a_ij."""
        return self.symmetrizers[i] * self.matrix[i][j]

    def bilinear(self, u, v):
        """(u|v) for root lattice elements given by coefficients."""
        return sum((u[i] * v[j] * self.form(i, j) for i in range(self.size) for j in range(self.size)
                    if u[i] and v[j]), Fraction(0))

    def coroot_value(self, gamma, i):
        """Value of the root lattice element γ on h_i, i.e. Σ_j a_ij γ_j."""
        return sum((self.matrix[i][j] * gamma[j] for j in range(self.size) if gamma[j]), Fraction(0))

    def grading_spec(self):
        """Γ = ℕ^I with 𝒜 = ℤ carrying the odd height (parity -1)."""
        return GradingSpec(self.size, (0,), (-1,))

    def degree(self, gamma):
        """Degree of e^{-γ}: its coefficients and its odd height."""
        gamma = tuple(int(x) for x in gamma)
        return self.grading_spec().degree(gamma, (sum(gamma[i] for i in self.odd),))

    def restrict(self, positions):
        """The data on a subset of positions, in the given order."""
        positions = tuple(positions)
        return BorcherdsCartanData(tuple(self.indices[i] for i in positions),
                                   tuple(tuple(self.matrix[i][j] for j in positions) for i in positions),
                                   tuple(self.symmetrizers[i] for i in positions),
                                   tuple(self.charge[i] for i in positions),
                                   tuple(self.parity[i] for i in positions))


@dataclass(frozen=True)
class SupportEntry:
    """β = Σ k_i α_i ∈ Φ⁺(Λ) with ε(β) and |β| = Σ k_i."""

    coefficients: tuple
    epsilon: int
    size: int


@dataclass(frozen=True)
class ImaginarySupportSet:
    """The elements of Φ⁺(Λ) up to a height bound (β = 0 included)."""

    values: tuple
    bound: int
    entries: tuple


@dataclass(frozen=True)
class WeylElement:
    """
    A Weyl group element w seen through its action.

    omega is w(Λ+ρ) - (Λ+ρ) in root coordinates; matrix and inverse are the
    integer matrices of w and w⁻¹ on the root lattice (columns are images of
    the simple roots).
    """

    length: int
    omega: tuple
    matrix: object
    inverse: object


@dataclass(frozen=True)
class FlaggedValue:
    """A result together with its provenance: conjectural or proven."""

    value: object
    conjectural: bool = False


def validate(data):
    """
    Check the Borcherds-Cartan conditions and the parity coloring.

    Args:
        data: BorcherdsCartanData

    Returns:
        list of violation messages, empty when the data is valid
    """
    problems = []
    n = data.size
    a = data.matrix
    if len(a) != n or any(len(row) != n for row in a):
        return ['matrix is not %dx%d' % (n, n)]
    for name in ('symmetrizers', 'charge', 'parity'):
        if len(getattr(data, name)) != n:
            problems.append('%s has %d entries, expected %d' % (name, len(getattr(data, name)), n))
    if problems:
        return problems
    if len(set(data.indices)) != n:
        problems.append('index labels repeat')
    for i in range(n):
        if a[i][i] != 2 and a[i][i] > 0:
            problems.append('a_%s%s = %s is neither 2 nor <= 0' % (data.indices[i], data.indices[i], a[i][i]))
        if data.symmetrizers[i] <= 0:
            problems.append('symmetrizer s_%s is not positive' % (data.indices[i],))
        if data.parity[i] not in (1, -1):
            problems.append('parity of %s is not +1 or -1' % (data.indices[i],))
        if data.charge[i] < 1:
            problems.append('charge of %s is not positive' % (data.indices[i],))
        if a[i][i] == 2 and data.charge[i] != 1:
            problems.append('real index %s has charge %d' % (data.indices[i], data.charge[i]))
        for j in range(n):
            label = (data.indices[i], data.indices[j])
            if i != j and a[i][j] > 0:
                problems.append('a_%s,%s = %s is positive' % (label + (a[i][j],)))
            if a[i][i] == 2 and a[i][j].denominator != 1:
                problems.append('a_%s,%s = %s is not an integer on a real row' % (label + (a[i][j],)))
            if (a[i][j] == 0) != (a[j][i] == 0):
                problems.append('a_%s,%s and a_%s,%s are not zero together' % (label + label[::-1]))
            if data.form(i, j) != data.form(j, i):
                problems.append('diag(s)A is not symmetric at %s,%s' % label)
            if a[i][i] == 2 and data.parity[i] == -1 and a[i][j].denominator == 1 and a[i][j] % 2:
                problems.append('odd real index %s needs even a_%s,%s, got %s' % ((label[0],) + label + (a[i][j],)))
    return problems


def _require_valid(data):
    problems = validate(data)
    if problems:
        raise GradingError('invalid Borcherds-Cartan data: ' + '; '.join(problems))


def _weight_values(data, values):
    if values is None:
        return (Fraction(0),) * data.size
    values = tuple(to_fraction(v) for v in values)
    if len(values) != data.size:
        raise GradingError('%d weight values for %d indices' % (len(values), data.size))
    return values


def dominant_check(data, values=None):
    """
    Whether Λ, given by its values Λ(h_i), is a dominant integral weight.

    Real indices need Λ(h_i) ∈ ℤ≥0 (even when the index is odd); imaginary
    indices need Λ(h_i) >= 0.
    """
    values = _weight_values(data, values)
    for i, v in enumerate(values):
        if v < 0:
            return False
        if data.matrix[i][i] == 2:
            if v.denominator != 1:
                return False
            if data.parity[i] == -1 and v.numerator % 2:
                return False
    return True


def imaginary_support(data, values=None, height_bound=0):
    """
    Enumerate Φ⁺(Λ) up to a height bound with ε(β).

    β = Σ k_i α_i over imaginary i with (Λ|α_i) = 0, pairwise orthogonal
    supports, and k_i >= 2 only where (α_i|α_i) = 0.  ε(β) is the product of
    binom(m_i, k_i) over even i and binom(m_j + k_j - 1, k_j) over odd j;
    elements with ε(β) = 0 are dropped.

    Args:
        data: BorcherdsCartanData
        values: Λ(h_i) per index (zero weight when omitted)
        height_bound: largest |β| listed

    Returns:
        ImaginarySupportSet
    """
    values = _weight_values(data, values)
    usable = [i for i in data.imaginary if data.symmetrizers[i] * values[i] == 0]
    entries = []
    coeffs = [0] * data.size

    def factor(i, k):
        m = data.charge[i]
        return math.comb(m, k) if data.parity[i] == 1 else math.comb(m + k - 1, k)

    def walk(pos, chosen, size, eps):
        entries.append(SupportEntry(tuple(coeffs), eps, size))
        for idx in range(pos, len(usable)):
            i = usable[idx]
            if any(data.form(i, j) != 0 for j in chosen):
                continue
            top = 1 if data.form(i, i) != 0 else height_bound - size
            for k in range(1, min(top, height_bound - size) + 1):
                f = factor(i, k)
                if not f:
                    break
                coeffs[i] = k
                walk(idx + 1, chosen + [i], size + k, eps * f)
            coeffs[i] = 0

    walk(0, [], 0, 1)
    entries.sort(key=lambda e: (e.size, e.coefficients))
    return ImaginarySupportSet(values, height_bound, tuple(entries))


def enumerate_weyl(data, values=None, bound=0, cap=DEFAULT_WEYL_CAP, parabolic=()):
    """
    Breadth-first enumeration of the Weyl group through its action.

    An element r_i·w is kept when it is longer than w and its exponent height
    ht(-ω) stays within the bound (heights only grow with length).  For a
    parabolic set J the search still covers all of W, and only the elements
    with w⁻¹α_j > 0 for every j ∈ J are returned.

    Args:
        data: BorcherdsCartanData
        values: Λ(h_i) (zero weight when omitted)
        bound: largest ht(-ω) kept
        cap: largest number of elements before GuardExceeded
        parabolic: positions of J

    Returns:
        list of WeylElement, by length
    """
    values = _weight_values(data, values)
    n = data.size
    a = np.array([[int(x) if data.matrix[i][i] == 2 else x for x in data.matrix[i]] for i in range(n)],
                 dtype=object)
    identity = np.array([[int(i == j) for j in range(n)] for i in range(n)], dtype=object)
    start = WeylElement(0, (0,) * n, identity, identity.copy())
    seen = {start.omega}
    found = [start]
    layer = [start]
    while layer:
        nxt = []
        for w in layer:
            for i in data.real:
                c = values[i] + 1 + sum(a[i, j] * w.omega[j] for j in range(n))
                if c <= 0:
                    continue
                omega = list(w.omega)
                omega[i] -= int(c)
                omega = tuple(omega)
                if -sum(omega) > bound or omega in seen:
                    continue
                inverse = w.inverse - np.outer(w.inverse[:, i], a[i, :])
                matrix = w.matrix.copy()
                matrix[i, :] = w.matrix[i, :] - a[i, :].dot(w.matrix)
                seen.add(omega)
                element = WeylElement(w.length + 1, omega, matrix, inverse)
                nxt.append(element)
                if all(x >= 0 for j in parabolic for x in inverse[:, j]):
                    found.append(element)
                if len(found) > cap:
                    raise GuardExceeded('more than %d Weyl group elements below height %d' % (cap, bound))
        layer = nxt
    logger.debug('%d Weyl group elements below height %d', len(found), bound)
    return found


def _sum_terms(data, values, bound, cap, parabolic, support):
    """(length, β entry, γ) for every term of the sum side with ht(γ) <= bound."""
    for w in enumerate_weyl(data, values, bound, cap, parabolic):
        base = [-x for x in w.omega]
        room = bound - sum(base)
        for beta in support.entries:
            if beta.size > room:
                break
            gamma = tuple(int(b + x) for b, x in zip(base, w.matrix.dot(np.array(beta.coefficients, dtype=object))))
            if sum(gamma) <= bound:
                yield w, beta, gamma


def weyl_sum_side(data, values=None, bound=0, cap=DEFAULT_WEYL_CAP):
    """
    The Weyl-Kac-Borcherds sum Σ (-1)^{l(w)+|β|} ε(β) e^{w(Λ+ρ-β)-ρ}.

    Terms are recorded at γ = Λ - (w(Λ+ρ-β) - ρ), so the zero weight gives
    the sum side of the denominator identity directly.

    Args:
        data: valid BorcherdsCartanData
        values: dominant Λ(h_i) (zero weight when omitted)
        bound: height truncation
        cap: Weyl group guard

    Returns:
        FormalSeries in the e-basis over data.grading_spec()
    """
    _require_valid(data)
    values = _weight_values(data, values)
    if not dominant_check(data, values):
        raise GradingError('weight %r is not dominant integral' % (values,))
    support = imaginary_support(data, values, bound)
    terms = {}
    for w, beta, gamma in _sum_terms(data, values, bound, cap, (), support):
        d = data.degree(gamma)
        terms[d] = terms.get(d, 0) + (-1) ** (w.length + beta.size) * beta.epsilon
    return FormalSeries(data.grading_spec(), bound, terms, 'e')


def irreducible_character(data, values, bound, cap=DEFAULT_WEYL_CAP):
    """
    Character of V(Λ) divided by e^Λ, as a series in e^{-γ}.

    Returns:
        FormalSeries in the e-basis (coefficients are weight multiplicities)
    """
    return weyl_sum_side(data, values, bound, cap) * weyl_sum_side(data, None, bound, cap).inverse()


def _as_degree(data, key):
    return key if not isinstance(key, tuple) else data.degree(key)


def denominator_check(data, multiplicities, bound, cap=DEFAULT_WEYL_CAP):
    """
    Check the denominator identity against a table of root superdimensions.

    Args:
        data: valid BorcherdsCartanData
        multiplicities: mapping γ (coefficient tuple or Degree) -> sdim 𝔤_{-γ}
        bound: height truncation
        cap: Weyl group guard

    Returns:
        CheckResult; the discrepancy is the lowest-height wrong degree
    """
    spec = data.grading_spec()
    table = PowerTraceTable.constant(spec, {_as_degree(data, k): v for k, v in multiplicities.items()})
    expected = weyl_sum_side(data, None, bound, cap).convert()
    return compare_series(expected, product_side(table, bound))


def finite_positive_roots(data, cap=DEFAULT_WEYL_CAP):
    """
    Positive roots of finite type data by closure under simple reflections.

    Args:
        data: valid data whose indices are all real
        cap: largest number of roots before GuardExceeded

    Returns:
        sorted list of coefficient tuples
    """
    _require_valid(data)
    if data.imaginary:
        raise GradingError('root closure needs every index real')
    n = data.size
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(n):
                c = data.coroot_value(root, i)
                image = list(root)
                image[i] -= int(c)
                image = tuple(image)
                if image not in roots and all(x >= 0 for x in image) and any(image):
                    roots.add(image)
                    nxt.append(image)
        if len(roots) > cap:
            raise GuardExceeded('more than %d roots: the data is not of finite type' % cap)
        frontier = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def _parabolic_positions(data, J):
    positions = tuple(data.position(j) for j in J)
    for j in positions:
        if data.matrix[j][j] != 2 or data.parity[j] != 1:
            raise GradingError('index %r of J is not real and even' % (data.indices[j],))
    return positions


def module_character(data, J, mu, bound, cap=DEFAULT_WEYL_CAP):
    """
    Character of the irreducible 𝔤₀^(J)-module V_J(μ).

    The Levi part 𝔤₀^(J) is the Kac-Moody algebra on J; its highest weight
    has values Λ_J(h_j) = Σ_k μ_k a_jk.

    Args:
        data: valid BorcherdsCartanData
        J: labels of real even indices
        mu: highest weight as root lattice coefficients (μ ∈ -Q⁺)
        bound: height truncation for γ
        cap: Weyl group guard

    Returns:
        FormalSeries in the e-basis: coefficient at γ is the multiplicity of
        the weight -γ
    """
    _require_valid(data)
    positions = _parabolic_positions(data, J)
    spec = data.grading_spec()
    top = tuple(-int(x) for x in mu)
    if any(x < 0 for x in top):
        raise GradingError('highest weight %r is not in -Q+' % (tuple(mu),))
    room = bound - sum(top)
    if room < 0:
        return FormalSeries(spec, bound, {}, 'e')
    if not positions:
        return FormalSeries(spec, bound, {data.degree(top): 1}, 'e')
    sub = data.restrict(positions)
    values = tuple(data.coroot_value(mu, j) for j in positions)
    if not dominant_check(sub, values):
        raise GradingError('V_J(%r) is not integrable: values %r' % (tuple(mu), values))
    character = irreducible_character(sub, values, room, cap)
    terms = {}
    for d, c in character.terms.items():
        gamma = list(top)
        for j, x in zip(positions, d.gamma):
            gamma[j] += x
        terms[data.degree(gamma)] = c
    return FormalSeries(spec, bound, terms, 'e')


def _check_free_case(data, positions):
    real = set(data.real)
    if not real <= set(positions):
        raise GradingError('the free description needs J to contain every real index')
    for i in data.imaginary:
        for j in data.imaginary:
            if data.matrix[i][j] == 0:
                raise GradingError('a_%s,%s = 0 between imaginary indices'
                                   % (data.indices[i], data.indices[j]))


def _check_target(data, positions, target):
    data.grading_spec().check(target, positive=True)
    if all(x == 0 for i, x in enumerate(target.gamma) if i not in positions):
        raise GradingError('degree %r lies in the root lattice of J' % (target.gamma,))


def free_generator_table(data, J, bound, cap=DEFAULT_WEYL_CAP):
    """
    Identity-element table of the generating space V = ⊕ V_J(-α_j)^{m_j}.

    Returns:
        PowerTraceTable with value ψ(γ)·Σ_j m_j mult V_J(-α_j) at γ
    """
    _require_valid(data)
    positions = _parabolic_positions(data, J)
    _check_free_case(data, positions)
    spec = data.grading_spec()
    values = {}
    for j in data.imaginary:
        mu = tuple(-int(i == j) for i in range(data.size))
        for d, c in module_character(data, J, mu, bound, cap).terms.items():
            values[d] = values.get(d, 0) + data.charge[j] * sign(spec, d) * c
    return PowerTraceTable.constant(spec, values)


def kostant_homology_table(data, J, bound, cap=DEFAULT_WEYL_CAP):
    """
    Supertraces of the homology superspace H^(J) predicted by Kostant's formula.

    str(H^(J)_γ) = Σ (-1)^{l(w)+|β|+1} ε(β) sdim V_J(w(ρ-β)-ρ)_γ over
    w ∈ W(J) and β ∈ Φ⁺(0) with l(w)+|β| >= 1.

    Args:
        data: valid BorcherdsCartanData
        J: labels of real even indices
        bound: height truncation
        cap: Weyl group guard

    Returns:
        FlaggedValue wrapping an identity-element PowerTraceTable, always
        flagged conjectural
    """
    _require_valid(data)
    positions = _parabolic_positions(data, J)
    spec = data.grading_spec()
    support = imaginary_support(data, None, bound)
    values = {}
    for w, beta, gamma in _sum_terms(data, None, bound, cap, positions, support):
        if w.length + beta.size == 0:
            continue
        weight = (-1) ** (w.length + beta.size + 1) * beta.epsilon
        for d, c in module_character(data, J, tuple(-x for x in gamma), bound, cap).terms.items():
            values[d] = values.get(d, 0) + weight * sign(spec, d) * c
    table = PowerTraceTable.constant(spec, values)
    return FlaggedValue(table, conjectural=True)


def _combine(data, tables, bound):
    """Merge per-generator tables into one table weighted by the charges."""
    spec = data.grading_spec()
    degrees = set()
    for table in tables.values():
        degrees.update(table.support)
    values = {}
    for label, table in tables.items():
        m = data.charge[data.position(label)]
        for d in degrees:
            for k in range(1, bound // d.weight + 1):
                v = table.value(k, d)
                if v:
                    values[(k, d)] = values.get((k, d), 0) + m * v
    return PowerTraceTable(spec, values, depth=bound)


def gkm_supertrace_free_case(data, J, target, tables=None, cap=DEFAULT_WEYL_CAP):
    """
    Supertrace on 𝔤_{-γ} when 𝔤₋^(J) is free on ⊕ V_J(-α_j)^{m_j}.

    Needs every real index in J and a_ij ≠ 0 between imaginary indices.

    Args:
        data: valid BorcherdsCartanData
        J: labels of real even indices
        target: Degree of data.grading_spec() outside the root lattice of J
        tables: mapping imaginary label -> PowerTraceTable of str(gᵏ|V_J(-α_j)),
            or one PowerTraceTable for the whole generating space; the
            identity element when omitted
        cap: Weyl group guard

    Returns:
        exact rational
    """
    _require_valid(data)
    positions = _parabolic_positions(data, J)
    _check_free_case(data, positions)
    _check_target(data, positions, target)
    if tables is None:
        g = free_generator_table(data, J, target.weight, cap)
    elif isinstance(tables, PowerTraceTable):
        g = tables
    else:
        g = _combine(data, tables, target.weight)
    return supertrace(g, target)


def gkm_supertrace_conjectural(data, J, homology, target):
    """
    Supertrace on 𝔤_{-γ} from str(gᵏ|H^(J)) tables.

    The result is always flagged conjectural, whatever the homology input.

    Args:
        data: valid BorcherdsCartanData
        J: labels of real even indices
        homology: PowerTraceTable, or FlaggedValue wrapping one
            (kostant_homology_table)
        target: Degree outside the root lattice of J

    Returns:
        FlaggedValue with the exact rational supertrace
    """
    _require_valid(data)
    positions = _parabolic_positions(data, J)
    _check_target(data, positions, target)
    if isinstance(homology, FlaggedValue):
        homology = homology.value
    return FlaggedValue(supertrace(homology, target), conjectural=True)
