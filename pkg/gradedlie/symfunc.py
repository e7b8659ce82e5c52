"""
Partitions, symmetric-group characters and Schur-type polynomials.

Schur, skew Schur and hook Schur polynomials are produced by tableau
enumeration over exact rationals; Littlewood-Richardson coefficients are
counted by strict ν-expansions of Young diagrams.

Documentation and examples are available at <https://gradedlie.readthedocs.io>
"""

from dataclasses import dataclass, field
from fractions import Fraction
import functools
import itertools
import math

from sympy.utilities.iterables import partitions

from .graded_series import FormalSeries, GradingError, GradingSpec

__all__ = ('Partition',
           'MultivarPolynomial',
           'partitions_of',
           'hook_partitions',
           'subpartitions',
           'centralizer_size',
           'mn_character',
           'schur_poly',
           'skew_schur_tableaux',
           'lr_coefficient',
           'skew_schur',
           'hook_schur',
           'hook_tableaux_count',
           'power_sum',
           'power_sum_product',
           'complete_h',
           'elementary_e',
           'schur_expand',
           'newton_generating_functions',
           )


@dataclass(frozen=True, order=True)
class Partition:
    """
    A partition λ stored as a weakly decreasing tuple of positive parts.

    Trailing zeros are stripped so that equal partitions compare equal.
    """

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise GradingError('%r is not a partition' % (parts,))
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, *parts):
        """Partition.of(2, 1) is λ = (2, 1)."""
        return cls(parts)

    def __getitem__(self, i):
        """λ_{i+1}, zero past the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return '(' + ','.join(str(p) for p in self.parts) + ')'

    @property
    def size(self):
        """|λ|."""
        return sum(self.parts)

    @property
    def length(self):
        """l(λ), the number of nonzero parts."""
        return len(self.parts)

    def conjugate(self):
        """λ′, the transposed diagram."""
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def contains(self, other):
        """True when other ⊆ self (componentwise)."""
        return all(self[i] >= p for i, p in enumerate(other.parts))

    def dominates(self, other):
        """Dominance order on partitions of equal weight."""
        if self.size != other.size:
            return False
        a = b = 0
        for i in range(max(self.length, other.length)):
            a += self[i]
            b += other[i]
            if a < b:
                return False
        return True

    def is_hook(self, k, l):
        """λ_{k+1} <= l, membership in H(k, l; |λ|)."""
        return self[k] <= l

    def split(self, k):
        """(λ₀, λ₁): the first k rows and the conjugate of the rest."""
        return Partition(self.parts[:k]), Partition(self.parts[k:]).conjugate()

    def cells(self):
        """Cells (row, column), row by row."""
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]


@dataclass(frozen=True, eq=False)
class MultivarPolynomial:
    """
    Polynomial in x₁..x_nx, y₁..y_ny with exact rational coefficients.

    Exponent vectors have length nx + ny, x-block first.
    """

    nx: int
    ny: int = 0
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != self.nx + self.ny:
                raise GradingError('exponent %r does not fit %d+%d variables' % (e, self.nx, self.ny))
            if c != 0:
                clean[e] = clean.get(e, 0) + Fraction(c)
        object.__setattr__(self, 'terms', {e: c for e, c in clean.items() if c})

    @classmethod
    def constant(cls, value, nx, ny=0):
        """The constant polynomial."""
        return cls(nx, ny, {(0,) * (nx + ny): value})

    def _check(self, other):
        if (self.nx, self.ny) != (other.nx, other.ny):
            raise GradingError('polynomials in different variable sets')

    def __eq__(self, other):
        if not isinstance(other, MultivarPolynomial):
            return NotImplemented
        return (self.nx, self.ny, self.terms) == (other.nx, other.ny, other.terms)

    def __hash__(self):
        return hash((self.nx, self.ny, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultivarPolynomial(self.nx, self.ny, terms)

    def __neg__(self):
        return MultivarPolynomial(self.nx, self.ny, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultivarPolynomial(self.nx, self.ny, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultivarPolynomial(self.nx, self.ny, terms)

    __rmul__ = __mul__

    def is_zero(self):
        """True for the zero polynomial."""
        return not self.terms

    def evaluate(self, x=(), y=()):
        """Value at the point (x; y)."""
        point = [Fraction(v) for v in tuple(x) + tuple(y)]
        if len(point) != self.nx + self.ny:
            raise GradingError('point has %d coordinates, expected %d' % (len(point), self.nx + self.ny))
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(point, e):
                term *= v ** k
            total += term
        return total

    def place(self, block, nx, ny):
        """
        Move a pure x-polynomial into the x or y block of a larger space.

        Args:
            block: 'x' or 'y'
            nx: x-variables of the target space
            ny: y-variables of the target space

        Returns:
            MultivarPolynomial over nx + ny variables
        """
        if self.ny:
            raise GradingError('place expects a polynomial in one block')
        size = nx if block == 'x' else ny
        if self.nx != size:
            raise GradingError('block %s has %d variables, polynomial has %d' % (block, size, self.nx))
        terms = {}
        for e, c in self.terms.items():
            terms[e + (0,) * ny if block == 'x' else (0,) * nx + e] = c
        return MultivarPolynomial(nx, ny, terms)

    def swap(self, block, i):
        """Exchange variables i and i+1 (0-based) of a block."""
        offset = 0 if block == 'x' else self.nx
        a, b = offset + i, offset + i + 1
        terms = {}
        for e, c in self.terms.items():
            e = list(e)
            e[a], e[b] = e[b], e[a]
            terms[tuple(e)] = c
        return MultivarPolynomial(self.nx, self.ny, terms)

    def is_symmetric(self, block):
        """Invariance under every adjacent transposition of one block."""
        n = self.nx if block == 'x' else self.ny
        return all(self.swap(block, i) == self for i in range(n - 1))


def partitions_of(n):
    """All partitions of n, in decreasing lexicographic order."""
    if n == 0:
        return [Partition()]
    found = []
    for p in partitions(n):
        found.append(Partition(tuple(sorted((k for k, m in p.items() for _ in range(m)), reverse=True))))
    return sorted(found, reverse=True)


def hook_partitions(k, l, n):
    """H(k, l; n): partitions of n with λ_{k+1} <= l."""
    return [lam for lam in partitions_of(n) if lam.is_hook(k, l)]


def subpartitions(lam):
    """Every partition μ ⊆ λ."""
    found = []

    def walk(i, limit, parts):
        found.append(Partition(tuple(parts)))
        if i == lam.length:
            return
        for p in range(1, min(limit, lam[i]) + 1):
            walk(i + 1, p, parts + [p])

    walk(0, lam[0], [])
    return found


def centralizer_size(rho):
    """z_ρ = ∏ i^{m_i} m_i!."""
    z = 1
    for part, mult in itertools.groupby(rho.parts):
        m = len(list(mult))
        z *= part ** m * math.factorial(m)
    return z


@functools.lru_cache(maxsize=None)
def _mn(parts, rho):
    if not rho:
        return 1 if not parts else 0
    r, rest = rho[0], rho[1:]
    n = len(parts)
    beads = {p + n - 1 - i for i, p in enumerate(parts)}
    total = 0
    for b in beads:
        if b - r < 0 or (b - r) in beads:
            continue
        height = sum(1 for x in beads if b - r < x < b)
        moved = sorted((beads - {b}) | {b - r}, reverse=True)
        shape = tuple(x - (n - 1 - i) for i, x in enumerate(moved))
        total += (-1) ** height * _mn(tuple(p for p in shape if p), rest)
    return total


def mn_character(lam, rho):
    """
    Character value χ_λ^ρ of the symmetric group.

    Border strips of length ρ₁, ρ₂, ... are removed one at a time; on the
    abacus a strip of length r is a bead moved r places to an empty slot and
    its height is the number of beads jumped.

    Args:
        lam: Partition labelling the irreducible character
        rho: Partition giving the cycle type

    Returns:
        integer
    """
    if lam.size != rho.size:
        raise GradingError('|%s| != |%s|' % (lam, rho))
    return _mn(lam.parts, rho.parts)


def _tableau_monomials(outer, inner, nvars):
    """
    Content vectors of semistandard tableaux of shape outer/inner.

    Entries 1..nvars weakly increase along rows and strictly down columns.

    Returns:
        dict exponent tuple -> count
    """
    cells = [(i, j) for i in range(outer.length) for j in range(inner[i], outer[i])]
    if not cells:
        return {(0,) * nvars: 1}
    if nvars == 0:
        return {}
    filling = {}
    content = [0] * nvars
    found = {}

    def walk(pos):
        if pos == len(cells):
            key = tuple(content)
            found[key] = found.get(key, 0) + 1
            return
        i, j = cells[pos]
        low = 1
        if (i, j - 1) in filling:
            low = filling[(i, j - 1)]
        if (i - 1, j) in filling:
            low = max(low, filling[(i - 1, j)] + 1)
        for v in range(low, nvars + 1):
            filling[(i, j)] = v
            content[v - 1] += 1
            walk(pos + 1)
            content[v - 1] -= 1
        filling.pop((i, j), None)

    walk(0)
    return found


def schur_poly(lam, nvars):
    """
    Schur polynomial S_λ(x₁..x_n) by semistandard tableau generation.

    Args:
        lam: Partition
        nvars: number of variables

    Returns:
        MultivarPolynomial in the x-block (zero when l(λ) > nvars)
    """
    return MultivarPolynomial(nvars, 0, _tableau_monomials(lam, Partition(), nvars))


def skew_schur_tableaux(lam, mu, nvars):
    """Skew Schur polynomial S_{λ/μ} directly from skew tableaux."""
    if not lam.contains(mu):
        raise GradingError('%s is not contained in %s' % (mu, lam))
    return MultivarPolynomial(nvars, 0, _tableau_monomials(lam, mu, nvars))


def _horizontal_strips(shape, lam, n):
    """Shapes obtained from shape by adding n boxes, no two in a column, inside λ."""
    rows = lam.length
    current = [shape[i] for i in range(rows)]
    out = []

    def walk(i, left, new):
        if i == rows:
            if left == 0:
                out.append(tuple(new))
            return
        top = lam[i] if i == 0 else min(lam[i], current[i - 1])
        for v in range(current[i], top + 1):
            if v - current[i] > left:
                break
            walk(i + 1, left - (v - current[i]), new + [v])

    walk(0, n, [])
    return out


def _is_lattice(labels):
    """Reading word condition: every prefix has at least as many p as p+1."""
    seen = {}
    for a in labels:
        seen[a] = seen.get(a, 0) + 1
        if a > 1 and seen[a] > seen.get(a - 1, 0):
            return False
    return True


def lr_coefficient(lam, mu, nu):
    """
    Littlewood-Richardson coefficient N^λ_{μν} by strict ν-expansions.

    Starting from the diagram of μ, ν₁ boxes labelled 1 are added with no two
    in one column, then ν₂ boxes labelled 2, and so on.  An expansion is
    strict when the labels read right to left along rows, top row first,
    form a lattice word.

    Args:
        lam: outer Partition
        mu: inner Partition
        nu: content Partition

    Returns:
        nonnegative integer
    """
    if lam.size != mu.size + nu.size or not lam.contains(mu):
        return 0
    count = 0

    def walk(p, shape, labels):
        nonlocal count
        if p == nu.length:
            rows = {}
            for (i, j), a in labels.items():
                rows.setdefault(i, []).append((j, a))
            word = [a for i in sorted(rows) for _, a in sorted(rows[i], reverse=True)]
            if _is_lattice(word):
                count += 1
            return
        for new in _horizontal_strips(shape, lam, nu[p]):
            added = dict(labels)
            for i, v in enumerate(new):
                for j in range(shape[i] if i < len(shape) else 0, v):
                    added[(i, j)] = p + 1
            walk(p + 1, new, added)

    walk(0, tuple(mu[i] for i in range(lam.length)), {})
    return count


def skew_schur(lam, mu, nvars):
    """
    Skew Schur polynomial S_{λ/μ} = Σ_ν N^λ_{μν} S_ν.

    Args:
        lam: outer Partition
        mu: inner Partition, μ ⊆ λ
        nvars: number of variables

    Returns:
        MultivarPolynomial in the x-block
    """
    if not lam.contains(mu):
        raise GradingError('%s is not contained in %s' % (mu, lam))
    total = MultivarPolynomial(nvars)
    for nu in partitions_of(lam.size - mu.size):
        if nu.length > nvars:
            continue
        n = lr_coefficient(lam, mu, nu)
        if n:
            total = total + schur_poly(nu, nvars) * n
    return total


def hook_schur(lam, k, l):
    """
    Hook Schur polynomial HS_λ(x; y) = Σ_{μ⊆λ} S_μ(x) S_{λ′/μ′}(y).

    Args:
        lam: Partition
        k: number of x-variables
        l: number of y-variables

    Returns:
        MultivarPolynomial over x₁..x_k, y₁..y_l (zero unless λ is a (k,l)-hook)
    """
    total = MultivarPolynomial(k, l)
    conj = lam.conjugate()
    for mu in subpartitions(lam):
        if mu.length > k:
            continue
        skew = skew_schur(conj, mu.conjugate(), l)
        if skew.is_zero():
            continue
        total = total + schur_poly(mu, k).place('x', k, l) * skew.place('y', k, l)
    return total


def hook_tableaux_count(lam, k, l):
    """Dimension of the gl(k,l)-module V_λ, i.e. HS_λ(1..1; 1..1)."""
    return int(hook_schur(lam, k, l).evaluate((1,) * k, (1,) * l))


def power_sum(r, nvars):
    """p_r = Σ x_i^r."""
    terms = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = r
        terms[tuple(e)] = 1
    return MultivarPolynomial(nvars, 0, terms)


def power_sum_product(rho, nvars):
    """p_ρ = ∏ p_{ρ_i}."""
    total = MultivarPolynomial.constant(1, nvars)
    for r in rho.parts:
        total = total * power_sum(r, nvars)
    return total


def complete_h(n, nvars):
    """Complete homogeneous symmetric polynomial h_n."""
    terms = {}
    for combo in itertools.combinations_with_replacement(range(nvars), n):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = 1
    return MultivarPolynomial(nvars, 0, terms)


def elementary_e(n, nvars):
    """Elementary symmetric polynomial e_n (zero for n > nvars)."""
    terms = {}
    for combo in itertools.combinations(range(nvars), n):
        e = [0] * nvars
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = 1
    return MultivarPolynomial(nvars, 0, terms)


def schur_expand(poly):
    """
    Expand a symmetric x-polynomial in Schur polynomials.

    The lexicographically largest monomial of a symmetric polynomial has a
    partition as exponent; its Schur polynomial is subtracted until nothing
    is left.

    Args:
        poly: symmetric MultivarPolynomial with ny = 0

    Returns:
        dict Partition -> coefficient
    """
    if poly.ny:
        raise GradingError('schur_expand works on x-polynomials')
    result = {}
    rest = poly
    while not rest.is_zero():
        lead = max(rest.terms)
        lam = Partition(lead)
        c = rest.terms[lead]
        result[lam] = c
        rest = rest - schur_poly(lam, poly.nx) * c
    return result


def newton_generating_functions(nvars, max_degree):
    """
    The three series of the fundamental symmetric function identity.

    Series live over Γ = ℕ^(1+nvars): the first coordinate is the degree of
    t, the others the x-exponents, truncated at total weight 2·max_degree.

    Args:
        nvars: number of variables
        max_degree: highest power of t kept

    Returns:
        tuple (exp(Σ p_r tʳ/r), Σ h_n tⁿ, (Σ (-1)ⁿ e_n tⁿ)⁻¹)
    """
    spec = GradingSpec.trivial(1 + nvars)
    bound = 2 * max_degree

    def series(polys):
        terms = {}
        for n, poly in polys:
            for e, c in poly.terms.items():
                d = spec.degree((n,) + e)
                terms[d] = terms.get(d, 0) + c
        return FormalSeries(spec, bound, terms, 'e')

    log_side = series((r, power_sum(r, nvars) * Fraction(1, r)) for r in range(1, max_degree + 1))
    complete = series((n, complete_h(n, nvars)) for n in range(max_degree + 1))
    alternating = series((n, elementary_e(n, nvars) * (-1) ** n) for n in range(max_degree + 1))
    return log_side.exp(), complete, alternating.inverse()
