"""
Dynkin diagram automorphisms and orbit Lie superalgebras.

A diagram automorphism σ of Borcherds-Cartan data folds it into the data of
the orbit Lie superalgebra 𝔤(σ).  The map φ sends the root lattice Q onto
the lattice Q̂ spanned by α̂_ī/(ε_i N_i); every element of Q̂ is stored as
integer coordinates in that basis (the "e-coordinates").  In these
coordinates φ simply adds up the coefficients over each σ-orbit.

Traces of the powers of σ on the φ-graded pieces 𝔤_[β] give the twining
denominator, which equals the denominator of the orbit algebra.  For type
A_n a matrix realization of σ on sl(n+1) provides brute-force traces.

Documentation and examples are available at <https://gradedlie.readthedocs.io>
"""

from dataclasses import dataclass, field
from fractions import Fraction
import itertools
import logging
import math
import re

import numpy as np
from sympy.functions.combinatorial.numbers import mobius
from sympy.ntheory import divisors

from .graded_series import (CheckResult, ConsistencyError, Degree, GradingError,
                            GradingSpec, InsufficientData, compare_series, to_fraction)
from .witt_engine import PowerTraceTable, product_side, reachable_degrees
from .freelie_oracle import fraction_free_rank
from .gkm import (BorcherdsCartanData, finite_positive_roots, free_generator_table,
                  gkm_supertrace_free_case, irreducible_character, validate)

logger = logging.getLogger(__name__)

__all__ = ('DiagramAutomorphism',
           'FoldedData',
           'FiniteRootModel',
           'validate_automorphism',
           'fold',
           'phi_map',
           'phi_power_map',
           'random_symmetric_pairs',
           'symmetric_form_check',
           'orbit_algebra_multiplicities',
           'orbit_denominator',
           'twining_denominator',
           'twining_verma_character',
           'twining_denominator_check',
           'sigma_power_trace',
           'fixed_point_sdim',
           'finite_adjoint_twining_check',
           )

_CYCLE_RE = re.compile(r'\(([^()]*)\)')


@dataclass(frozen=True)
class DiagramAutomorphism:
    """
    A permutation σ of the simple roots of Borcherds-Cartan data.

    `images[i]` is the position σ(i).  Nothing is checked on construction;
    validate_automorphism reports the conditions a diagram automorphism
    must satisfy.
    """

    data: BorcherdsCartanData
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, 'images', tuple(int(x) for x in self.images))

    @classmethod
    def identity(cls, data):
        """The trivial automorphism."""
        return cls(data, tuple(range(data.size)))

    @classmethod
    def from_cycles(cls, data, text):
        """
        Parse cycle notation such as "(1 3)", "(1 2)(3 4)" or "1 3".

        Labels are matched against str() of the index labels; an empty
        string or "()" is the identity.
        """
        groups = _CYCLE_RE.findall(text) if '(' in text else [text]
        names = {str(label): i for i, label in enumerate(data.indices)}
        images = list(range(data.size))
        used = set()
        for group in groups:
            cycle = group.replace(',', ' ').split()
            for name in cycle:
                if name not in names:
                    raise GradingError('unknown index %r in %r' % (name, text))
                if name in used:
                    raise GradingError('index %r appears twice in %r' % (name, text))
                used.add(name)
            for src, dst in zip(cycle, cycle[1:] + cycle[:1]):
                images[names[src]] = names[dst]
        return cls(data, tuple(images))

    def is_permutation(self):
        """Whether images is a bijection of the positions."""
        return sorted(self.images) == list(range(self.data.size))

    def orbits(self):
        """σ-orbits as tuples (i, σi, σ²i, ...), i the smallest position, sorted by i."""
        if not self.is_permutation():
            raise GradingError('%r is not a permutation of %d positions' % (self.images, self.data.size))
        seen = set()
        found = []
        for start in range(self.data.size):
            if start in seen:
                continue
            orbit = [start]
            x = self.images[start]
            while x != start:
                orbit.append(x)
                x = self.images[x]
            seen.update(orbit)
            found.append(tuple(orbit))
        return tuple(found)

    @property
    def order(self):
        """|σ|, the least common multiple of the orbit sizes."""
        return math.lcm(*(len(o) for o in self.orbits()))

    def power(self, d):
        """σ^d."""
        images = list(range(self.data.size))
        for _ in range(d % self.order):
            images = [self.images[x] for x in images]
        return DiagramAutomorphism(self.data, tuple(images))

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.images))

    def __str__(self):
        labels = self.data.indices
        cycles = ['(%s)' % ' '.join(str(labels[i]) for i in o) for o in self.orbits() if len(o) > 1]
        return ''.join(cycles) or '()'


def validate_automorphism(automorphism):
    """
    Check that σ is a Dynkin diagram automorphism.

    σ must be a permutation with a_ij = a_σ(i)σ(j), and it must preserve the
    parity, the charge and the symmetrizers of every index.

    Args:
        automorphism: DiagramAutomorphism

    Returns:
        list of violation messages, empty when σ is valid
    """
    data = automorphism.data
    sigma = automorphism.images
    if len(sigma) != data.size or not automorphism.is_permutation():
        return ['%r is not a permutation of %d positions' % (sigma, data.size)]
    problems = []
    labels = data.indices
    for i in range(data.size):
        for j in range(data.size):
            if data.matrix[i][j] != data.matrix[sigma[i]][sigma[j]]:
                problems.append('a_%s,%s = %s but a_%s,%s = %s'
                                % (labels[i], labels[j], data.matrix[i][j],
                                   labels[sigma[i]], labels[sigma[j]], data.matrix[sigma[i]][sigma[j]]))
        if data.parity[i] != data.parity[sigma[i]]:
            problems.append('σ sends %s to %s of the other parity' % (labels[i], labels[sigma[i]]))
        if data.charge[i] != data.charge[sigma[i]]:
            problems.append('σ sends %s (charge %d) to %s (charge %d)'
                            % (labels[i], data.charge[i], labels[sigma[i]], data.charge[sigma[i]]))
        if data.symmetrizers[i] != data.symmetrizers[sigma[i]]:
            problems.append('symmetrizers of %s and %s differ' % (labels[i], labels[sigma[i]]))
    return problems


@dataclass(frozen=True)
class FoldedData:
    """
    The folded data of a diagram automorphism.

    Orbits are indexed ī = 0, 1, ... in the order of their smallest
    position.  `matrix` is Â over all orbits, `linked` lists the orbits
    passing the linking condition and `data` is the Borcherds-Cartan data
    of the orbit algebra on them, with symmetrizers ŝ_ī = N_i ε_i s_i.
    """

    automorphism: DiagramAutomorphism
    orbits: tuple
    epsilon: tuple
    matrix: tuple
    symmetrizers: tuple
    linked: tuple
    data: BorcherdsCartanData = field(repr=False)

    @property
    def size(self):
        """Rank of Q̂, the number of σ-orbits."""
        return len(self.orbits)

    def scale(self, orbit):
        """ε_i N_i, so that α̂_ī = ε_i N_i times the e-coordinate basis vector."""
        return self.epsilon[orbit] * len(self.orbits[orbit])

    def grading_spec(self):
        """Q̂⁺ with 𝒜 = ℤ carrying the odd e-height (parity -1)."""
        return GradingSpec(self.size, (0,), (-1,))

    def degree(self, coords):
        """Degree of E^{-β} for β in e-coordinates."""
        coords = tuple(int(x) for x in coords)
        data = self.automorphism.data
        odd = sum(x for idx, x in enumerate(coords) if data.parity[self.orbits[idx][0]] == -1)
        return self.grading_spec().degree(coords, (odd,))

    def lift(self, gamma):
        """e-coordinates of Σ γ_ī α̂_ī for γ over the linked orbits."""
        out = [0] * self.size
        for x, orbit in zip(gamma, self.linked):
            s = self.scale(orbit)
            if self.automorphism.data.parity[self.orbits[orbit][0]] == -1 and s % 2 == 0:
                raise GradingError('odd orbit %d has even ε·N = %s, so its parity is not the odd e-height'
                                   % (orbit, s))
            out[orbit] += int(x * s)
        return tuple(out)

    def form(self, x, y):
        """(x|y) on Q̂ in e-coordinates, from (α̂_ī|α̂_j̄) = ŝ_ī â_īj̄."""
        total = Fraction(0)
        for i in range(self.size):
            if not x[i]:
                continue
            for j in range(self.size):
                if y[j]:
                    total += (x[i] * y[j] * self.symmetrizers[i] * self.matrix[i][j]
                              / (self.scale(i) * self.scale(j)))
        return total


def fold(automorphism):
    """
    Fold Borcherds-Cartan data along a diagram automorphism.

    ε_j = 1 - Σ_{k=1}^{N_j-1} a_{j,σᵏj} and â_īj̄ = ε_j Σ_k a_{i,σᵏj}.  An
    orbit is linked when ε_i ∈ {1, 2} for real i or ε_i = 1 for imaginary
    i; then â_īī = a_ii.  Charge and parity come from the representative.

    Args:
        automorphism: valid DiagramAutomorphism

    Returns:
        FoldedData
    """
    problems = validate_automorphism(automorphism)
    if problems:
        raise GradingError('invalid diagram automorphism: ' + '; '.join(problems))
    data = automorphism.data
    a = data.matrix
    orbits = automorphism.orbits()
    epsilon = tuple(1 - sum((a[o[0]][x] for x in o[1:]), Fraction(0)) for o in orbits)
    matrix = tuple(tuple(epsilon[jdx] * sum((a[oi[0]][x] for x in oj), Fraction(0))
                         for jdx, oj in enumerate(orbits))
                   for oi in orbits)
    symmetrizers = tuple(len(o) * eps * data.symmetrizers[o[0]] for o, eps in zip(orbits, epsilon))
    linked = []
    for idx, (o, eps) in enumerate(zip(orbits, epsilon)):
        i = o[0]
        if (a[i][i] == 2 and eps in (1, 2)) or (a[i][i] != 2 and eps == 1):
            if matrix[idx][idx] != a[i][i]:
                raise ConsistencyError('â at orbit of %s is %s, expected %s'
                                       % (data.indices[i], matrix[idx][idx], a[i][i]))
            linked.append(idx)
    linked = tuple(linked)
    folded_data = BorcherdsCartanData(tuple(data.indices[orbits[i][0]] for i in linked),
                                      tuple(tuple(matrix[i][j] for j in linked) for i in linked),
                                      tuple(symmetrizers[i] for i in linked),
                                      tuple(data.charge[orbits[i][0]] for i in linked),
                                      tuple(data.parity[orbits[i][0]] for i in linked))
    problems = validate(folded_data)
    if problems:
        raise GradingError('folded data is invalid: ' + '; '.join(problems))
    logger.debug('folded %d indices along %s into %d orbits, %d linked',
                 data.size, automorphism, len(orbits), len(linked))
    return FoldedData(automorphism, orbits, epsilon, matrix, symmetrizers, linked, folded_data)


def phi_map(folded, q):
    """
    φ(Σ q_i α_i) in e-coordinates: α_i ↦ α̂_ī/(ε_i N_i).

    Args:
        folded: FoldedData
        q: coefficients over the simple roots

    Returns:
        tuple with one coordinate per σ-orbit
    """
    if len(q) != folded.automorphism.data.size:
        raise GradingError('%d coefficients for %d simple roots' % (len(q), folded.automorphism.data.size))
    return tuple(sum(q[i] for i in orbit) for orbit in folded.orbits)


def phi_power_map(automorphism, d, coords):
    """
    φ^d: Q̂(d) → Q̂, the map with φ^d φ_d = φ.

    Q̂(d) is the lattice of σ^d; each σ^d-orbit lies inside one σ-orbit,
    whose coordinate receives its coefficient.

    Args:
        automorphism: DiagramAutomorphism σ
        d: the power
        coords: e-coordinates over the σ^d-orbits

    Returns:
        e-coordinates over the σ-orbits
    """
    fine = automorphism.power(d).orbits()
    coarse = automorphism.orbits()
    if len(coords) != len(fine):
        raise GradingError('%d coordinates for %d orbits of σ^%d' % (len(coords), len(fine), d))
    out = [0] * len(coarse)
    for orbit, x in zip(fine, coords):
        out[next(idx for idx, o in enumerate(coarse) if orbit[0] in o)] += x
    return tuple(out)


def _is_symmetric(automorphism, q):
    return all(q[i] == q[automorphism.images[i]] for i in range(len(q)))


def random_symmetric_pairs(automorphism, count=100, seed=0, span=5):
    """
    Random pairs of σ-invariant root lattice elements.

    Each orbit receives one integer in [-span, span] shared by its members.
    """
    rng = np.random.default_rng(seed)
    orbits = automorphism.orbits()
    pairs = []
    for _ in range(count):
        pair = []
        for _ in range(2):
            q = [0] * automorphism.data.size
            for orbit, x in zip(orbits, rng.integers(-span, span + 1, size=len(orbits))):
                for i in orbit:
                    q[i] = int(x)
            pair.append(tuple(q))
        pairs.append(tuple(pair))
    return pairs


def symmetric_form_check(folded, pairs):
    """
    Check (λ|μ) = (φ(λ)|φ(μ)) on σ-invariant elements.

    Args:
        folded: FoldedData
        pairs: iterable of (λ, μ) coefficient tuples over the simple roots

    Returns:
        CheckResult; the discrepancy is the failing pair
    """
    data = folded.automorphism.data
    for lam, mu in pairs:
        lam = tuple(to_fraction(x) for x in lam)
        mu = tuple(to_fraction(x) for x in mu)
        for q in (lam, mu):
            if not _is_symmetric(folded.automorphism, q):
                raise GradingError('%r is not fixed by σ' % (q,))
        expected = data.bilinear(lam, mu)
        found = folded.form(phi_map(folded, lam), phi_map(folded, mu))
        if expected != found:
            return CheckResult(False, (lam, mu), expected, found)
    return CheckResult(True)


def _e_weight(folded, gamma):
    return sum(x * folded.scale(i) for x, i in zip(gamma, folded.linked))


def orbit_algebra_multiplicities(folded, bound, supplied=None):
    """
    Root superdimensions of the orbit algebra up to an e-weight bound.

    Finite type comes from the root closure, data with only imaginary
    indices and no zero entries between them from the free description;
    anything else must be supplied.

    Args:
        folded: FoldedData
        bound: largest e-weight Σ γ_ī ε_i N_i kept
        supplied: mapping γ (coefficients over the linked orbits) -> sdim

    Returns:
        dict γ -> sdim 𝔤(σ)_γ over the positive roots
    """
    data = folded.data
    if supplied is not None:
        source = {tuple(int(x) for x in gamma): to_fraction(v) for gamma, v in supplied.items()}
    elif not data.imaginary:
        if data.odd:
            raise InsufficientData('finite orbit algebra with odd indices: supply its multiplicities')
        source = {root: Fraction(1) for root in finite_positive_roots(data)}
    elif not data.real and all(data.matrix[i][j] != 0 for i in data.imaginary for j in data.imaginary):
        simple = [data.degree(tuple(int(i == j) for j in range(data.size))) for i in range(data.size)]
        table = free_generator_table(data, (), bound)
        source = {d.gamma: gkm_supertrace_free_case(data, (), d, table) for d in reachable_degrees(simple, bound)
                  if _e_weight(folded, d.gamma) <= bound}
    else:
        raise InsufficientData('no multiplicity source for the orbit algebra on %r' % (data.indices,))
    return {gamma: v for gamma, v in source.items() if v and _e_weight(folded, gamma) <= bound}


def orbit_denominator(folded, bound, supplied=None):
    """
    ∏ (1 - E^{-α̂})^{sdim 𝔤(σ)_α̂} over the positive roots of the orbit algebra.

    Returns:
        FormalSeries in the E-basis over folded.grading_spec()
    """
    values = {folded.degree(folded.lift(gamma)): v
              for gamma, v in orbit_algebra_multiplicities(folded, bound, supplied).items()}
    return product_side(PowerTraceTable.constant(folded.grading_spec(), values), bound)


def _unit(m, a, b):
    x = np.zeros((m, m), dtype=object)
    x[a, b] = 1
    return x


def _same(x, y):
    return bool((x == y).all())


def _is_type_a(data):
    n = data.size
    for i in range(n):
        if data.parity[i] != 1:
            return False
        for j in range(n):
            want = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            if data.matrix[i][j] != want:
                return False
    return True


@dataclass(frozen=True, eq=False)
class FiniteRootModel:
    """
    sl(n+1) with a diagram automorphism of A_n acting on matrices.

    The flip i ↦ n+1-i is realized as X ↦ -S Xᵀ S⁻¹ for an anti-diagonal
    sign matrix S; `signs` holds its entries (None for the identity).
    Positive roots α_i + ... + α_{j-1} correspond to the matrix units E_ij.
    """

    automorphism: DiagramAutomorphism
    folded: FoldedData
    signs: tuple
    pairs: tuple
    roots: tuple

    @classmethod
    def type_a(cls, automorphism):
        """
        Build and verify the model.

        Args:
            automorphism: the identity or the flip of A_n data

        Returns:
            FiniteRootModel
        """
        data = automorphism.data
        if not _is_type_a(data):
            raise GradingError('the matrix model needs even A_n data in path order')
        n = data.size
        flip = tuple(n - 1 - i for i in range(n))
        if not automorphism.is_identity() and automorphism.images != flip:
            raise GradingError('%s is neither the identity nor the flip of A_%d' % (automorphism, n))
        m = n + 1
        pairs = tuple((a, b) for a in range(m) for b in range(a + 1, m))
        roots = tuple(tuple(int(a <= i < b) for i in range(n)) for a, b in pairs)
        folded = fold(automorphism)
        if automorphism.is_identity():
            return cls(automorphism, folded, None, pairs, roots)
        alternating = tuple((-1) ** (k + 1) for k in range(m))
        for signs in itertools.chain([alternating], itertools.product((1, -1), repeat=m)):
            model = cls(automorphism, folded, tuple(signs), pairs, roots)
            if model._generators_ok():
                logger.debug('A_%d flip realized with signs %r', n, signs)
                return model
        raise ConsistencyError('no anti-diagonal sign matrix realizes the flip of A_%d' % n)

    @property
    def size(self):
        """Matrix size n+1."""
        return self.automorphism.data.size + 1

    def _generators_ok(self):
        m = self.size
        sigma = self.automorphism.images
        for i in range(m - 1):
            j = sigma[i]
            if not _same(self.act(_unit(m, i, i + 1)), _unit(m, j, j + 1)):
                return False
            if not _same(self.act(_unit(m, i + 1, i)), _unit(m, j + 1, j)):
                return False
        return True

    def act(self, x, k=1):
        """σᵏ(X)."""
        x = np.array(x, dtype=object)
        if self.signs is None:
            return x.copy()
        m = self.size
        s = np.zeros((m, m), dtype=object)
        for a in range(m):
            s[a, m - 1 - a] = self.signs[a]
        for _ in range(k):
            x = -s.dot(x.T).dot(s.T)
        return x

    def _fiber(self, beta):
        beta = tuple(beta.gamma if isinstance(beta, Degree) else beta)
        return [pair for pair, root in zip(self.pairs, self.roots) if phi_map(self.folded, root) == beta]

    def direct_trace(self, k, beta, negative=True):
        """
        tr(σᵏ | 𝔤_[-β]) (or 𝔤_[β]) by acting on the root vectors.

        Args:
            k: the power
            beta: e-coordinates or Degree of Q̂⁺
            negative: use the negative root spaces

        Returns:
            exact integer as a Fraction
        """
        total = 0
        for a, b in self._fiber(beta):
            r, c = (b, a) if negative else (a, b)
            total += self.act(_unit(self.size, r, c), k)[r, c]
        return Fraction(total)

    def _matrix_on(self, units):
        """Matrix of σ on the span of the given matrix units (columns are images)."""
        index = {u: n for n, u in enumerate(units)}
        out = np.zeros((len(units), len(units)), dtype=object)
        for col, (r, c) in enumerate(units):
            image = self.act(_unit(self.size, r, c))
            for (a, b), v in np.ndenumerate(image):
                if v:
                    if (a, b) not in index:
                        raise ConsistencyError('σ does not preserve the span of %r' % (units,))
                    out[index[(a, b)], col] = v
        return out

    def _fixed(self, units):
        matrix = self._matrix_on(units)
        return len(units) - fraction_free_rank(matrix - np.identity(len(units), dtype=object))

    def _fixes_identity(self):
        m = self.size
        eye = np.identity(m, dtype=object)
        return _same(self.act(eye), eye)

    def direct_fixed_dimension(self, beta, negative=True):
        """dim of the σ-fixed part of 𝔤_[-β] (or 𝔤_[β])."""
        units = [(b, a) if negative else (a, b) for a, b in self._fiber(beta)]
        return self._fixed(units) if units else 0

    def fixed_dimension(self):
        """dim 𝔤^σ over all of sl(n+1)."""
        m = self.size
        units = [(a, b) for a in range(m) for b in range(m)]
        return self._fixed(units) - int(self._fixes_identity())

    def fixed_cartan_dimension(self):
        """dim 𝔥^σ of the diagonal trace-zero matrices."""
        units = [(a, a) for a in range(self.size)]
        return self._fixed(units) - int(self._fixes_identity())

    def cartan_trace(self):
        """tr(σ|𝔥)."""
        m = self.size
        on_diagonal = sum(self.act(_unit(m, a, a))[a, a] for a in range(m))
        return Fraction(on_diagonal - self.act(np.identity(m, dtype=object))[0, 0])

    def highest_eigenvalue(self):
        """Eigenvalue of σ on the highest root vector E_{1,n+1}."""
        m = self.size
        return self.act(_unit(m, 0, m - 1))[0, m - 1]

    def trace_table(self, bound):
        """
        PowerTraceTable of tr(σᵏ|𝔤_[-β]) over Q̂⁺ up to the bound.

        The table has period |σ|.
        """
        order = self.automorphism.order
        values = {}
        for beta in sorted({phi_map(self.folded, root) for root in self.roots}):
            if sum(beta) > bound:
                continue
            d = self.folded.degree(beta)
            for k in range(1, order + 1):
                values[(k, d)] = self.direct_trace(k, beta)
        return PowerTraceTable(self.folded.grading_spec(), values, period=order)

    def adjoint_twining_character(self):
        """
        Σ_β tr(σ|𝔤_[β]) e^β over the adjoint module.

        Normalized so that σ acts by 1 on the highest root vector.

        Returns:
            dict e-coordinates (possibly negative) -> trace
        """
        top = self.highest_eigenvalue()
        character = {}
        for root in self.roots:
            beta = phi_map(self.folded, root)
            for key, negative in ((beta, False), (tuple(-x for x in beta), True)):
                character[key] = character.get(key, 0) + self.direct_trace(1, beta, negative) / top
        zero = (0,) * self.folded.size
        character[zero] = character.get(zero, 0) + self.cartan_trace() / top
        return {k: v for k, v in character.items() if v}


def twining_denominator(source, bound):
    """
    φ(R_σ) = ∏_β exp(-Σ_m (1/m) str(σᵐ|𝔤_[-β]) E^{-mβ}).

    Args:
        source: FiniteRootModel, or a PowerTraceTable of str(σᵐ|𝔤_[-β]) over Q̂⁺
        bound: e-weight truncation

    Returns:
        FormalSeries in the E-basis
    """
    if isinstance(source, FiniteRootModel):
        source = source.trace_table(bound)
    if not isinstance(source, PowerTraceTable):
        raise InsufficientData('twining denominator needs a model or a trace table')
    return product_side(source, bound)


def twining_verma_character(source, bound):
    """The twining character of M(0) divided by e^0, that is φ(R_σ)⁻¹ in the e-basis."""
    return twining_denominator(source, bound).inverse().convert()


def twining_denominator_check(automorphism, bound, traces=None, supplied=None):
    """
    Compare the twining denominator of σ with the orbit algebra denominator.

    Args:
        automorphism: DiagramAutomorphism
        bound: e-weight truncation
        traces: PowerTraceTable of str(σᵐ|𝔤_[-β]); the A_n matrix model
            is used when omitted
        supplied: orbit algebra multiplicities when they have no built-in source

    Returns:
        CheckResult with the lowest-weight discrepancy
    """
    folded = fold(automorphism)
    if traces is None:
        traces = FiniteRootModel.type_a(automorphism)
    return compare_series(orbit_denominator(folded, bound, supplied), twining_denominator(traces, bound))


def _pushed_multiplicities(automorphism, p, bound, supplied):
    """sdim 𝔤(σᵖ)_[γ]ᵖ for every γ ∈ Q̂⁺ up to the bound."""
    folded = fold(automorphism.power(p))
    own = orbit_algebra_multiplicities(folded, bound, (supplied or {}).get(p))
    out = {}
    for gamma, v in own.items():
        key = phi_power_map(automorphism, p, folded.lift(gamma))
        out[key] = out.get(key, 0) + v
    return out


def sigma_power_trace(automorphism, k, beta, supplied=None):
    """
    str(σᵏ|𝔤_[-β]) from orbit algebra superdimensions by Möbius inversion.

    Σ over a·d | β of μ(d)/(ad) · sdim 𝔤(σ^{dk})_[β/ad].

    Args:
        automorphism: DiagramAutomorphism σ
        k: the power
        beta: e-coordinates or Degree of Q̂⁺
        supplied: mapping p -> multiplicities of the orbit algebra of σᵖ
            (p in 1..|σ|, |σ| standing for 𝔤 itself) where needed

    Returns:
        exact rational
    """
    beta = tuple(int(x) for x in (beta.gamma if isinstance(beta, Degree) else beta))
    if any(x < 0 for x in beta) or not any(beta):
        raise GradingError('%r is not in Q̂⁺' % (beta,))
    order = automorphism.order
    g = 0
    for x in beta:
        g = math.gcd(g, x)
    tables = {}
    total = Fraction(0)
    for e in divisors(g):
        e = int(e)
        quotient = tuple(x // e for x in beta)
        for d in divisors(e):
            d = int(d)
            mu = int(mobius(d))
            if not mu:
                continue
            p = (d * k - 1) % order + 1
            if p not in tables:
                tables[p] = _pushed_multiplicities(automorphism, p, sum(beta), supplied)
            total += Fraction(mu, e) * tables[p].get(quotient, 0)
    return total


def fixed_point_sdim(automorphism, beta, supplied=None):
    """
    sdim of the σ-fixed part of 𝔤_[-β], the average of str(σᵏ|𝔤_[-β]).

    Raises:
        ConsistencyError: purely even data gives a non-integral or negative value
    """
    order = automorphism.order
    value = sum((sigma_power_trace(automorphism, k, beta, supplied) for k in range(1, order + 1)),
                Fraction(0)) / order
    if not automorphism.data.odd and (value.denominator != 1 or value < 0):
        raise ConsistencyError('fixed-point dimension at %r is %s' % (tuple(beta), value))
    return value


def _orbit_character(folded, top):
    """Character of the orbit algebra module with highest weight top (e-coordinates)."""
    values = tuple(sum((folded.matrix[i][j] * Fraction(top[j]) / folded.scale(j) for j in range(folded.size)),
                       Fraction(0))
                   for i in folded.linked)
    series = irreducible_character(folded.data, values, 2 * sum(top))
    character = {}
    for d, c in series.terms.items():
        key = tuple(t - x for t, x in zip(top, folded.lift(d.gamma)))
        character[key] = character.get(key, 0) + c
    return {k: v for k, v in character.items() if v}


def finite_adjoint_twining_check(model, character=None):
    """
    Compare the twining character of the adjoint module with the orbit algebra.

    φ(ch_σ 𝔤) must equal the character of the orbit algebra module whose
    highest weight is φ(θ), θ the highest root.

    Args:
        model: FiniteRootModel
        character: twining character to test (model.adjoint_twining_character()
            when omitted)

    Returns:
        CheckResult; the discrepancy is the first differing weight
    """
    if character is None:
        character = model.adjoint_twining_character()
    top = phi_map(model.folded, model.roots[model.pairs.index((0, model.size - 1))])
    expected = _orbit_character(model.folded, top)
    for key in sorted(set(expected) | set(character)):
        a = expected.get(key, 0)
        b = character.get(key, 0)
        if a != b:
            return CheckResult(False, key, a, b)
    return CheckResult(True)
