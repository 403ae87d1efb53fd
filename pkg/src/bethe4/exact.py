"""Exact rational scalars, permutation/subset combinatorics, and symmetrization sums.

Everything in this package is computed over the rationals with `fractions.Fraction`;
identities are checked by exact equality at generic rational points, never by
floating-point comparison. Rationals serialize as the canonical string "p/q"
(with "/q" omitted when the denominator is 1), which is what `str(Fraction)`
already produces.

Permutations are tuples in 0-based one-line notation: `sigma[i]` is the image of
`i`. Composition is left-to-right, `compose(a, b)(i) == b[a[i]]`, so that acting
on variable tuples by substitution, `permute(z, s)[i] == z[s[i]]`, satisfies
`permute(z, compose(a, b)) == permute(permute(z, b), a)`. This is the convention
under which the deformed-permutation coefficient calculus (see permcalc) is
multiplicative.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

Rational = Fraction

Perm = tuple[int, ...]


class PoleError(ZeroDivisionError):
    """A denominator that must stay nonzero vanished at the given parameter point."""


def rat(value: int | str | Fraction) -> Fraction:
    """Build a Fraction from an int, a Fraction, or a "p/q" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value))


def format_rational(x: Fraction) -> str:
    return str(x)


def q_factor(ts: Sequence[Fraction]) -> Fraction:
    """prod_{i<j} (t_i - t_j - 1)/(t_i - t_j), the weight attached to one ordering.

    Raises PoleError if two entries coincide.
    """
    res = Fraction(1)
    n = len(ts)
    for i in range(n):
        for j in range(i + 1, n):
            d = ts[i] - ts[j]
            if d == 0:
                raise PoleError(f"coincident arguments t[{i}] == t[{j}] == {ts[i]}")
            res *= (d - 1) / d
    return res


def sym(f: Callable[..., Fraction], ts: Sequence[Fraction]) -> Fraction:
    """Plain symmetrization: sum of f over all orderings of ts."""
    total = Fraction(0)
    for p in itertools.permutations(ts):
        total += f(*p)
    return total


def sym_bar(f: Callable[..., Fraction], ts: Sequence[Fraction]) -> Fraction:
    """Weighted symmetrization: sum of f(t^s) * q_factor(t^s) over all orderings."""
    total = Fraction(0)
    for p in itertools.permutations(ts):
        total += f(*p) * q_factor(p)
    return total


def check_factorial_identity(xs: Sequence[Fraction]) -> bool:
    """sum over orderings of prod (x_i - x_j - 1)/(x_i - x_j) equals n! exactly."""
    return sym_bar(lambda *p: Fraction(1), xs) == math.factorial(len(xs))


def subset_pairs(p: int, q: int, r: int, k: int) -> list[tuple[Perm, Perm]]:
    """All pairs (I, J) of subsets of range(k) with |I|=p, |J|=q, |I & J|=r.

    Subsets are returned as sorted tuples of 0-based indices. The list is empty
    when the cardinality constraints cannot be met.
    """
    pairs = []
    for i_set in itertools.combinations(range(k), p):
        for j_set in itertools.combinations(range(k), q):
            if len(set(i_set) & set(j_set)) == r:
                pairs.append((i_set, j_set))
    return pairs


def permutations(k: int) -> Iterator[Perm]:
    """All k! permutations of range(k), each exactly once, in a deterministic order."""
    return iter(itertools.permutations(range(k)))


# ---------------------------------------------------------------------------
# permutation utilities
# ---------------------------------------------------------------------------

def identity_perm(k: int) -> Perm:
    return tuple(range(k))


def compose(a: Perm, b: Perm) -> Perm:
    """Apply a first, then b: compose(a, b)(i) = b(a(i))."""
    return tuple(b[a[i]] for i in range(len(a)))


def inverse_perm(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, ai in enumerate(a):
        inv[ai] = i
    return tuple(inv)


def perm_length(a: Perm) -> int:
    """Number of inversions (Coxeter length)."""
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])


def permute(values: Sequence, a: Perm) -> tuple:
    """Substitution action: permute(z, a)[i] = z[a[i]]."""
    return tuple(values[a[i]] for i in range(len(a)))


def transposition(k: int, a: int) -> Perm:
    """The simple transposition s_a of S_k swapping positions a and a+1 (0-based)."""
    img = list(range(k))
    img[a], img[a + 1] = img[a + 1], img[a]
    return tuple(img)


def longest_perm(k: int) -> Perm:
    """The longest element of S_k, i -> k-1-i."""
    return tuple(range(k - 1, -1, -1))
