"""
Brute-force graded components of free Lie superalgebras.

Bracket monomials are expanded inside the tensor algebra with the super sign
rule and the rank of their span is computed exactly.  The results serve as
ground truth for the Witt-formula machinery.

Documentation and examples are available at <https://gradedlie.readthedocs.io>
"""

from dataclasses import dataclass
from fractions import Fraction
import functools
import logging
import math

import numpy as np
from sympy.functions.combinatorial.numbers import mobius
from sympy.ntheory import divisors
from sympy.utilities.iterables import multiset_permutations

from .graded_series import GradingError, GradingSpec, GuardExceeded, sign, to_fraction
from .witt_engine import PowerTraceTable

logger = logging.getLogger(__name__)

__all__ = ('Letter',
           'SuperAlphabet',
           'BracketMonomial',
           'left_normed',
           'expand_bracket',
           'fraction_free_rank',
           'letter_contents',
           'graded_dimension',
           'graded_trace',
           'lyndon_count',
           )

DEFAULT_GUARD = 2000


@dataclass(frozen=True)
class Letter:
    """A generator: its name, degree and eigenvalue under the group element."""

    name: str
    degree: object
    eigenvalue: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, 'eigenvalue', to_fraction(self.eigenvalue))


@dataclass(frozen=True)
class SuperAlphabet:
    """
    Generators of a free Lie superalgebra with a diagonal group action.

    The parity of a letter is the sign of its degree.
    """

    spec: GradingSpec
    letters: tuple

    def __post_init__(self):
        letters = tuple(self.letters)
        for letter in letters:
            self.spec.check(letter.degree, positive=True)
        object.__setattr__(self, 'letters', letters)

    @classmethod
    def standard(cls, even_eigenvalues=(), odd_eigenvalues=()):
        """
        Degree-one letters over Γ = ℕ with 𝒜 = ℤ₂.

        Args:
            even_eigenvalues: one eigenvalue per even letter x1, x2, ...
            odd_eigenvalues: one eigenvalue per odd letter y1, y2, ...

        Returns:
            SuperAlphabet
        """
        spec = GradingSpec.super_grading(1)
        letters = [Letter('x%d' % (i + 1), spec.degree((1,), (0,)), lam)
                   for i, lam in enumerate(even_eigenvalues)]
        letters += [Letter('y%d' % (i + 1), spec.degree((1,), (1,)), lam)
                    for i, lam in enumerate(odd_eigenvalues)]
        return cls(spec, tuple(letters))

    def parity(self, i):
        """ψ of letter i."""
        return sign(self.spec, self.letters[i].degree)

    def power_trace_table(self, depth):
        """PowerTraceTable of the diagonal action on the span of the letters."""
        return PowerTraceTable.from_eigenvalues(
            self.spec, [(x.degree, x.eigenvalue) for x in self.letters], depth)


@dataclass(frozen=True)
class BracketMonomial:
    """A bracket [left, right]; leaves are letter indices."""

    left: object
    right: object

    def leaves(self):
        """Letter indices from left to right."""
        out = []
        for side in (self.left, self.right):
            out.extend(side.leaves() if isinstance(side, BracketMonomial) else [side])
        return tuple(out)


def left_normed(word):
    """The bracket [[..[w1, w2], w3].., wn] (a bare letter for length one)."""
    tree = word[0]
    for letter in word[1:]:
        tree = BracketMonomial(tree, letter)
    return tree


def _parity_of(parities, tree):
    p = 1
    for i in (tree.leaves() if isinstance(tree, BracketMonomial) else (tree,)):
        p *= parities[i]
    return p


def _expand(parities, tree):
    if not isinstance(tree, BracketMonomial):
        return {(tree,): 1}
    u = _expand(parities, tree.left)
    v = _expand(parities, tree.right)
    eps = -1 if _parity_of(parities, tree.left) == -1 and _parity_of(parities, tree.right) == -1 else 1
    out = {}
    for wu, cu in u.items():
        for wv, cv in v.items():
            out[wu + wv] = out.get(wu + wv, 0) + cu * cv
            out[wv + wu] = out.get(wv + wu, 0) - eps * cu * cv
    return {w: c for w, c in out.items() if c}


def expand_bracket(alphabet, tree):
    """
    Expand a bracket monomial in the tensor algebra.

    [u, v] = u⊗v - ε v⊗u with ε = -1 exactly when u and v are both odd.

    Args:
        alphabet: SuperAlphabet supplying the parities
        tree: BracketMonomial or a single letter index

    Returns:
        dict word (tuple of letter indices) -> integer coefficient
    """
    parities = [alphabet.parity(i) for i in range(len(alphabet.letters))]
    return _expand(parities, tree)


def fraction_free_rank(matrix):
    """
    Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the division by the
    previous pivot is exact and no rationals appear.

    Args:
        matrix: 2-D array-like of Python integers

    Returns:
        the rank over the rationals
    """
    a = np.array(matrix, dtype=object)
    if a.ndim != 2 or a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    prev = 1
    for col in range(cols):
        if rank == rows:
            break
        nonzero = np.nonzero(a[rank:, col] != 0)[0]
        if len(nonzero) == 0:
            continue
        p = rank + int(nonzero[0])
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        pivot = a[rank, col]
        if rank + 1 < rows:
            below = a[rank + 1:, col:]
            a[rank + 1:, col:] = (pivot * below - np.outer(a[rank + 1:, col], a[rank, col:])) // prev
        prev = pivot
        rank += 1
    return rank


@functools.lru_cache(maxsize=None)
def _block_dimension(key, guard):
    """
    Dimension of the free Lie superalgebra component with a given letter content.

    key is a sorted tuple of (parity, count); only parities and counts matter.
    Rows are left-normed brackets starting with the rarest letter, columns are
    all words of the content.
    """
    parities = [p for p, _ in key]
    counts = [c for _, c in key]
    content = [i for i, c in enumerate(counts) for _ in range(c)]
    n = len(content)
    n_words = math.factorial(n)
    for c in counts:
        n_words //= math.factorial(c)
    if n_words > guard:
        raise GuardExceeded('block %r needs %d words, guard is %d' % (key, n_words, guard))
    if n == 1:
        return 1
    first = min(range(len(counts)), key=lambda i: counts[i])
    rest = list(content)
    rest.remove(first)
    columns = {}
    rows = []
    for tail in multiset_permutations(rest):
        vec = {(first,): 1}
        parity = parities[first]
        for x in tail:
            eps = -1 if parity == -1 and parities[x] == -1 else 1
            nxt = {}
            for w, c in vec.items():
                nxt[w + (x,)] = nxt.get(w + (x,), 0) + c
                nxt[(x,) + w] = nxt.get((x,) + w, 0) - eps * c
            vec = {w: c for w, c in nxt.items() if c}
            parity *= parities[x]
        row = {}
        for w, c in vec.items():
            row[columns.setdefault(w, len(columns))] = c
        rows.append(row)
    if not columns:
        return 0
    dense = [[row.get(j, 0) for j in range(len(columns))] for row in rows]
    rank = fraction_free_rank(dense)
    logger.debug('block %r: %d rows, %d columns, rank %d', key, len(rows), len(columns), rank)
    return rank


def letter_contents(alphabet, target):
    """
    All letter multiplicity vectors whose degrees sum to target.

    Args:
        alphabet: SuperAlphabet
        target: degree with nonzero Γ-part

    Returns:
        list of tuples of counts, one entry per letter
    """
    alphabet.spec.check(target, positive=True)
    letters = alphabet.letters
    found = []
    counts = [0] * len(letters)

    def walk(i, remaining, acc):
        if i == len(letters):
            if not any(remaining) and acc == target:
                found.append(tuple(counts))
            return
        d = letters[i].degree
        positive = [c for c in range(len(remaining)) if d.gamma[c]]
        most = min(remaining[c] // d.gamma[c] for c in positive)
        for m in range(most + 1):
            counts[i] = m
            rest = tuple(r - m * x for r, x in zip(remaining, d.gamma))
            step = d.scale(m)
            walk(i + 1, rest, step if acc is None else acc + step)
        counts[i] = 0

    walk(0, target.gamma, None)
    return found


def _blocks(alphabet, target, guard):
    for counts in letter_contents(alphabet, target):
        key = tuple(sorted((alphabet.parity(i), c) for i, c in enumerate(counts) if c))
        yield counts, _block_dimension(key, guard)


def graded_dimension(alphabet, target, guard=DEFAULT_GUARD):
    """
    Dimension of the free Lie superalgebra component at target.

    Args:
        alphabet: SuperAlphabet
        target: degree with nonzero Γ-part
        guard: largest number of words allowed in one letter-content block

    Returns:
        nonnegative integer
    """
    return sum(dim for _, dim in _blocks(alphabet, target, guard))


def graded_trace(alphabet, target, guard=DEFAULT_GUARD):
    """
    Supertrace of the diagonal action on the component at target.

    The action is the scalar ∏ λ_i^{c_i} on each letter-content block.

    Args:
        alphabet: SuperAlphabet
        target: degree with nonzero Γ-part
        guard: largest number of words allowed in one letter-content block

    Returns:
        exact rational ψ(target)·trace
    """
    total = Fraction(0)
    for counts, dim in _blocks(alphabet, target, guard):
        if dim:
            scalar = Fraction(1)
            for letter, c in zip(alphabet.letters, counts):
                scalar *= letter.eigenvalue ** c
            total += dim * scalar
    return sign(alphabet.spec, target) * total


def lyndon_count(content):
    """
    Number of Lyndon words with the given letter multiplicities.

    Args:
        content: sequence of letter counts

    Returns:
        nonnegative integer
    """
    content = [c for c in content if c]
    if not content:
        raise GradingError('empty content')
    n = sum(content)
    g = 0
    for c in content:
        g = math.gcd(g, c)
    total = 0
    for d in divisors(g):
        d = int(d)
        term = math.factorial(n // d)
        for c in content:
            term //= math.factorial(c // d)
        total += int(mobius(d)) * term
    return total // n
