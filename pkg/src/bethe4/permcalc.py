"""Coefficients of deformed-permutation words and their exchange identities.

The deformed generator attached to the simple transposition s_a acts on pairs
(tau, sigma) of permutations with a rational weight in z:

    shat_a = ( (z_a - z_{a+1})/(z_a - z_{a+1} - 1) * s_a-double-dot
               - 1/(z_a - z_{a+1} - 1) ) * s_a-dot.

Expanding the word of a permutation sigma left to right and pushing all
function factors through the dotted copy yields the coefficient table
X[sigma, tau](z). Only the coefficient shadow is materialized, never the
abstract algebra: the diagonal product formula, the delta identity, and the
two recurrences then become genuine executable checks.

Permutations are 0-based tuples; composition is left-to-right (see exact.py).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import (Perm, PoleError, compose, identity_perm, inverse_perm,
                    longest_perm, perm_length, permutations, permute,
                    q_factor, transposition)


def descents(sigma: Perm) -> list[int]:
    return [a for a in range(len(sigma) - 1) if sigma[a] > sigma[a + 1]]


def reduced_word(sigma: Perm) -> tuple[int, ...]:
    """A reduced word by inversion elimination: always take the smallest descent.

    The word (a_1, ..., a_l) satisfies sigma = s_{a_1} * ... * s_{a_l} in
    left-to-right composition; deterministic for reproducible expansions.
    """
    word: list[int] = []
    cur = list(sigma)
    while True:
        for a in range(len(cur) - 1):
            if cur[a] > cur[a + 1]:
                word.append(a)
                cur[a], cur[a + 1] = cur[a + 1], cur[a]
                break
        else:
            return tuple(word)


def all_reduced_words(sigma: Perm) -> list[tuple[int, ...]]:
    """Every reduced word of sigma (branching over all descents)."""
    ds = descents(sigma)
    if not ds:
        return [()]
    words = []
    for a in ds:
        rest = list(sigma)
        rest[a], rest[a + 1] = rest[a + 1], rest[a]
        words.extend((a,) + w for w in all_reduced_words(tuple(rest)))
    return words


def _word_is_valid(word, sigma: Perm) -> bool:
    acc = identity_perm(len(sigma))
    for a in word:
        acc = compose(acc, transposition(len(sigma), a))
    return acc == sigma


def expand_word(word, z, k: int) -> dict[Perm, Fraction]:
    """Coefficients of the deformed word prod shat_{a}: map tau -> X coefficient.

    Walking the word left to right, the accumulated dotted permutation rho gets
    pushed through each new weight, so the weights are evaluated at z^rho.
    """
    coeffs: dict[Perm, Fraction] = {identity_perm(k): Fraction(1)}
    rho = identity_perm(k)
    for a in word:
        zr = permute(z, rho)
        d = zr[a] - zr[a + 1]
        if d == 1:
            raise PoleError(f"deformed word hits pole: z_{a}(rho) - z_{a + 1}(rho) = 1")
        s_a = transposition(k, a)
        amp = d / (d - 1)
        off = Fraction(1) / (d - 1)
        new: dict[Perm, Fraction] = {}
        for tau, c in coeffs.items():
            ts = compose(tau, s_a)
            cur = new.get(ts, 0) + c * amp
            if cur:
                new[ts] = cur
            else:
                new.pop(ts, None)
            cur = new.get(tau, 0) - c * off
            if cur:
                new[tau] = cur
            else:
                new.pop(tau, None)
        coeffs = new
        rho = compose(rho, s_a)
    return coeffs


def x_coeff(sigma: Perm, tau: Perm, z) -> Fraction:
    """X_{sigma,tau}(z) via the deterministic reduced word of sigma."""
    return expand_word(reduced_word(sigma), tuple(z), len(sigma)).get(tau, Fraction(0))


def x_table(k: int, z) -> dict[tuple[Perm, Perm], Fraction]:
    """The full coefficient table for S_k at the point z (zeros omitted)."""
    z = tuple(z)
    table: dict[tuple[Perm, Perm], Fraction] = {}
    for sigma in permutations(k):
        for tau, c in expand_word(reduced_word(sigma), z, k).items():
            table[(sigma, tau)] = c
    return table


def phi(z) -> Fraction:
    """prod_{a<b} (z_a - z_b - 1)/(z_a - z_b); the inverse of the long diagonal coefficient."""
    return q_factor(tuple(z))


def diagonal_product(sigma: Perm, z) -> Fraction:
    """Closed form for X_{sigma,sigma}: product of (z_a - z_b)/(z_a - z_b - 1)
    over value pairs a < b appearing out of order in sigma."""
    inv = inverse_perm(sigma)
    k = len(sigma)
    res = Fraction(1)
    for a in range(k):
        for b in range(a + 1, k):
            if inv[a] > inv[b]:
                d = z[a] - z[b]
                if d == 1:
                    raise PoleError("diagonal product hits pole z_a - z_b = 1")
                res *= d / (d - 1)
    return res


def check_longperm(sigma: Perm, z) -> bool:
    """Support bound, equal-length vanishing, and the diagonal product formula."""
    z = tuple(z)
    k = len(sigma)
    ls = perm_length(sigma)
    coeffs = expand_word(reduced_word(sigma), z, k)
    for tau in permutations(k):
        c = coeffs.get(tau, Fraction(0))
        lt = perm_length(tau)
        if lt > ls and c != 0:
            return False
        if lt == ls and tau != sigma and c != 0:
            return False
    return coeffs.get(sigma, Fraction(0)) == diagonal_product(sigma, z)


def check_delta_identity(rho: Perm, tau: Perm, z) -> bool:
    """sum_lambda X_{lambda,rho}(z) Phi(z^{lambda s0}) X_{s0 lambda^-1, s0 tau^-1}(z^{lambda s0})
    equals delta_{rho,tau}."""
    z = tuple(z)
    k = len(rho)
    s0 = longest_perm(k)
    total = Fraction(0)
    for lam in permutations(k):
        c1 = x_coeff(lam, rho, z)
        if c1 == 0:
            continue
        z_ls = permute(z, compose(lam, s0))
        total += (c1 * phi(z_ls)
                  * x_coeff(compose(s0, inverse_perm(lam)), compose(s0, inverse_perm(tau)), z_ls))
    return total == (1 if rho == tau else 0)


def check_x_recurrences(mu: Perm, sigma: Perm, a: int, z) -> bool:
    """Both adjacent-swap recurrences for the X coefficients."""
    z = tuple(z)
    k = len(mu)
    s_a = transposition(k, a)
    d = z[a] - z[a + 1]
    if d in (Fraction(1), Fraction(-1), Fraction(0)):
        raise PoleError("recurrence needs z_a - z_{a+1} outside {0, 1, -1}")

    lhs = x_coeff(mu, sigma, permute(z, s_a))
    rhs = ((d / (d + 1)) * x_coeff(compose(s_a, mu), compose(s_a, sigma), z)
           + x_coeff(compose(s_a, mu), sigma, z) / (d + 1))
    if lhs != rhs:
        return False

    z_m = permute(z, compose(s_a, inverse_perm(mu)))
    lhs = x_coeff(mu, sigma, z_m)
    rhs = ((d / (d - 1)) * x_coeff(compose(mu, s_a), compose(sigma, s_a), z_m)
           - x_coeff(compose(mu, s_a), sigma, z_m) / (d - 1))
    return lhs == rhs


def check_multiplicativity(sigma: Perm, tau: Perm, rho: Perm, z) -> bool:
    """X_{sigma tau, rho}(z) = sum_pi X_{sigma,pi}(z) X_{tau, pi^-1 rho}(z^sigma)."""
    z = tuple(z)
    k = len(sigma)
    lhs = x_coeff(compose(sigma, tau), rho, z)
    z_s = permute(z, sigma)
    total = Fraction(0)
    for pi in permutations(k):
        c = x_coeff(sigma, pi, z)
        if c:
            total += c * x_coeff(tau, compose(inverse_perm(pi), rho), z_s)
    return lhs == total


def check_reduced_word_independence(sigma: Perm, z) -> bool:
    """Every reduced word of sigma expands to the same coefficient map."""
    z = tuple(z)
    k = len(sigma)
    words = all_reduced_words(sigma)
    assert all(_word_is_valid(w, sigma) for w in words)
    ref = expand_word(words[0], z, k)
    return all(expand_word(w, z, k) == ref for w in words[1:])
