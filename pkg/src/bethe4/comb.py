"""Closed combinatorial formulas for the weight-function coefficients: the
F / F-tilde products, their symmetrized V / V-tilde forms, the G-function, and
three stacked expansions that must all agree with the RTT oracle:

* ``weight_function_presym`` -- unsymmetrized sum over all subset pairs,
* ``weight_function_main``   -- one pair per (p, q, r), symmetrized over t2,
* ``weight_function_main2``  -- one choice-sequence pair per (p, q, r), fully
  symmetrized over all three variable groups with the G-function.

Subsets and choice sequences are 0-based sorted tuples of indices into the
middle variable group; the exposed index arithmetic is shifted accordingly.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .exact import PoleError, permute, q_factor, subset_pairs
from .gl2 import EvalModuleContext
from .linear import SparseVec, accumulate

Shape = tuple[int, int, int]
Subset = tuple[int, ...]


def _inv(d: Fraction, what: str) -> Fraction:
    if d == 0:
        raise PoleError(f"vanishing denominator: {what} = 0")
    return Fraction(1) / d


def f_weight(i_set: Subset, t, z) -> Fraction:
    """F_I(t, z): prod over a of 1/(t_a - z_{i_a}) * prod_{m > i_a} (t_a - z_m + 1)/(t_a - z_m)."""
    k = len(z)
    res = Fraction(1)
    for a, i in enumerate(i_set):
        ta = t[a]
        res *= _inv(ta - z[i], f"t[{a + 1}] - z[{i + 1}]")
        for m in range(i + 1, k):
            d = ta - z[m]
            res *= (d + 1) * _inv(d, f"t[{a + 1}] - z[{m + 1}]")
    return res


def f_tilde(i_set: Subset, t, z) -> Fraction:
    """F~_I(t, z): the mirrored product pairing z_{i_a} with t_{xi-a+1}."""
    xi, k = len(t), len(z)
    res = Fraction(1)
    for a, i in enumerate(i_set):
        ta = t[xi - 1 - a]
        res *= _inv(z[i] - ta, f"z[{i + 1}] - t[{xi - a}]")
        for m in range(i + 1, k):
            d = z[m] - ta
            res *= (d + 1) * _inv(d, f"z[{m + 1}] - t[{xi - a}]")
    return res


def v_fn(i_set: Subset, t, z, y: Fraction) -> Fraction:
    """V_I(t, z, y) = Sym-bar over t of F_I * prod (t_a - y), over (xi - |I|)!."""
    xi, p = len(t), len(i_set)
    total = Fraction(0)
    for perm in itertools.permutations(t):
        c = f_weight(i_set, perm, z)
        for a in range(p):
            c *= perm[a] - y
        total += c * q_factor(perm)
    return total / math.factorial(xi - p)


def v_tilde_fn(j_set: Subset, t, z, y: Fraction) -> Fraction:
    """V~_J(t, z, y) = Sym-bar over t of F~_J * prod (t_{xi-a+1} - y), over (xi - |J|)!."""
    xi, q = len(t), len(j_set)
    total = Fraction(0)
    for perm in itertools.permutations(t):
        c = f_tilde(j_set, perm, z)
        for a in range(q):
            c *= perm[xi - 1 - a] - y
        total += c * q_factor(perm)
    return total / math.factorial(xi - q)


# ---------------------------------------------------------------------------
# (p, q, r) bookkeeping
# ---------------------------------------------------------------------------

def pqr_triples(shape: Shape) -> list[tuple[int, int, int]]:
    xi1, xi2, xi3 = shape
    out = []
    for p in range(min(xi2, xi3) + 1):
        for q in range(min(xi2, xi1) + 1):
            for r in range(max(0, p + q - xi2), min(p, q) + 1):
                out.append((p, q, r))
    return out


def pbw_exponents(shape: Shape, p: int, q: int, r: int) -> tuple[int, ...]:
    xi1, xi2, xi3 = shape
    return (xi2 - p - q + r, q - r, p - r, r, xi1 - q, xi3 - p)


def orbit_constant(p: int, q: int, r: int, k: int) -> int:
    """Order of the S_k-stabilizer of a pair in S_{p,q,r,k}: the four blocks
    I&J, I-J, J-I and the complement may be shuffled independently.

    (The complement has k-p-q+r elements; the source text prints k-p-q-r,
    which is negative for admissible triples like (1,1,1) at k = 2.)
    """
    return (math.factorial(p - r) * math.factorial(q - r) * math.factorial(r)
            * math.factorial(k - p - q + r))


def default_choice(p: int, q: int, r: int, xi2: int) -> tuple[Subset, Subset]:
    """The first natural choice of sequences: i = {1..p}, j = {p+1-r..p+q-r}."""
    i_seq = tuple(range(p))
    j_seq = tuple(range(p - r, p - r + q))
    return i_seq, j_seq


def alternate_choice(p: int, q: int, r: int, xi2: int) -> tuple[Subset, Subset]:
    """The second natural choice: i = {q+1-r..q+p-r}, j = {1..q}."""
    return tuple(range(q - r, q - r + p)), tuple(range(q))


def valid_choices(p: int, q: int, r: int, xi2: int) -> list[tuple[Subset, Subset]]:
    """All pairs of increasing sequences in range(xi2) with |i|=p, |j|=q, |overlap|=r."""
    return subset_pairs(p, q, r, xi2)


def global_prefactor(shape: Shape, t, x: Fraction) -> Fraction:
    res = Fraction(1)
    for g, group in enumerate(t):
        for i, ti in enumerate(group):
            res *= _inv(ti - x, f"t{g + 1}_{i + 1} - x")
    return res


# ---------------------------------------------------------------------------
# the G-function and the three engines
# ---------------------------------------------------------------------------

def g_fn(i_seq: Subset, j_seq: Subset, t, x: Fraction, lam2: Fraction, lam3: Fraction) -> Fraction:
    """G_{i,j}(t): numerators (t3_a - x + L3), (t1_{xi1-q+s} - x + L2), paired
    with middle-group differences as dictated by the chosen sequences."""
    t1, t2, t3 = t
    xi1, xi2 = len(t1), len(t2)
    q = len(j_seq)
    res = Fraction(1)
    for a, i in enumerate(i_seq):
        ta = t3[a]
        res *= (ta - x + lam3) * _inv(ta - t2[i], f"t3_{a + 1} - t2_{i + 1}")
        for m in range(i + 1, xi2):
            d = ta - t2[m]
            res *= (d + 1) * _inv(d, f"t3_{a + 1} - t2_{m + 1}")
    for s, j in enumerate(j_seq):
        ts_ = t1[xi1 - q + s]
        res *= (ts_ - x + lam2) * _inv(t2[j] - ts_, f"t2_{j + 1} - t1_{xi1 - q + s + 1}")
        # inner product over the middle variables preceding t2_{j_s}; the
        # source display's upper bound xi2 - j_s fails the oracle cross-check
        for l in range(j):
            d = t2[l] - ts_
            res *= (d + 1) * _inv(d, f"t2_{l + 1} - t1_{xi1 - q + s + 1}")
    return res


def sym_bar_triple_g(i_seq: Subset, j_seq: Subset, t, x: Fraction,
                     lam2: Fraction, lam3: Fraction) -> Fraction:
    """Sym-bar over each of the three groups applied to G_{i,j}."""
    t1, t2, t3 = (tuple(g) for g in t)
    total = Fraction(0)
    for p1 in itertools.permutations(t1):
        q1 = q_factor(p1)
        for p2 in itertools.permutations(t2):
            q12 = q1 * q_factor(p2)
            for p3 in itertools.permutations(t3):
                total += q12 * q_factor(p3) * g_fn(i_seq, j_seq, (p1, p2, p3), x, lam2, lam3)
    return total


def weight_function_presym(shape: Shape, t, ctx: EvalModuleContext) -> SparseVec:
    """Unsymmetrized expansion: sum of V~_J V_I over all pairs in S_{p,q,r,xi2}."""
    _check(shape, t)
    x = ctx.x
    lam = ctx.hw.lam
    t1, t2, t3 = (tuple(g) for g in t)
    pref = global_prefactor(shape, (t1, t2, t3), x)
    acc: dict = {}
    for p, q, r in pqr_triples(shape):
        coeff = Fraction(0)
        for i_set, j_set in subset_pairs(p, q, r, shape[1]):
            coeff += (v_tilde_fn(j_set, t1, t2, x - lam[1])
                      * v_fn(i_set, t3, t2, x - lam[2]))
        if coeff:
            accumulate(acc, pbw_exponents(shape, p, q, r), pref * coeff)
    return SparseVec(acc)


def weight_function_main(shape: Shape, t, ctx: EvalModuleContext,
                         pairs: dict | None = None) -> SparseVec:
    """One fixed pair per (p, q, r), symmetrized over the middle group with
    the reversal conventions: V over I-check and V~ over reversed t2."""
    _check(shape, t)
    x = ctx.x
    lam = ctx.hw.lam
    t1, t2, t3 = (tuple(g) for g in t)
    xi2 = shape[1]
    pref = global_prefactor(shape, (t1, t2, t3), x)
    acc: dict = {}
    for p, q, r in pqr_triples(shape):
        if pairs and (p, q, r) in pairs:
            i0, j0 = pairs[(p, q, r)]
        else:
            i0, j0 = subset_pairs(p, q, r, xi2)[0]
        i0_check = tuple(sorted(xi2 - 1 - i for i in i0))
        total = Fraction(0)
        for z in itertools.permutations(t2):
            z_rev = tuple(reversed(z))
            total += (q_factor(z)
                      * v_fn(i0_check, t3, z, x - lam[2])
                      * v_tilde_fn(j0, t1, z_rev, x - lam[1]))
        coeff = total / orbit_constant(p, q, r, xi2)
        if coeff:
            accumulate(acc, pbw_exponents(shape, p, q, r), pref * coeff)
    return SparseVec(acc)


def weight_function_main2(shape: Shape, t, ctx: EvalModuleContext,
                          choices: dict | None = None) -> SparseVec:
    """Fully closed form: triple Sym-bar of the G-function per (p, q, r)."""
    _check(shape, t)
    x = ctx.x
    lam = ctx.hw.lam
    xi1, xi2, xi3 = shape
    t_groups = tuple(tuple(g) for g in t)
    pref = global_prefactor(shape, t_groups, x)
    acc: dict = {}
    for p, q, r in pqr_triples(shape):
        if choices and (p, q, r) in choices:
            i_seq, j_seq = choices[(p, q, r)]
        else:
            i_seq, j_seq = default_choice(p, q, r, xi2)
        s = sym_bar_triple_g(i_seq, j_seq, t_groups, x, lam[1], lam[2])
        denom = (math.factorial(xi2 - p - q + r) * math.factorial(q - r)
                 * math.factorial(p - r) * math.factorial(r)
                 * math.factorial(xi1 - q) * math.factorial(xi3 - p))
        coeff = s / denom
        if coeff:
            accumulate(acc, pbw_exponents(shape, p, q, r), pref * coeff)
    return SparseVec(acc)


def _check(shape: Shape, t) -> None:
    if min(shape) < 0 or max(shape) > 6:
        raise ValueError(f"shape out of range (components must be 0..6): {shape}")
    if tuple(len(g) for g in t) != tuple(shape):
        raise ValueError("variable groups do not match shape")


# ---------------------------------------------------------------------------
# standalone identity checks
# ---------------------------------------------------------------------------

def check_choice_independence(shape: Shape, t, ctx: EvalModuleContext,
                              choice_a: tuple[Subset, Subset],
                              choice_b: tuple[Subset, Subset]) -> bool:
    """Triple Sym-bar of G is the same for two admissible choice pairs."""
    lam = ctx.hw.lam
    t_groups = tuple(tuple(g) for g in t)
    sa = sym_bar_triple_g(choice_a[0], choice_a[1], t_groups, ctx.x, lam[1], lam[2])
    sb = sym_bar_triple_g(choice_b[0], choice_b[1], t_groups, ctx.x, lam[1], lam[2])
    return sa == sb


def check_symprop(p: int, q: int, r: int, k: int, t1, t3, z,
                  y2: Fraction, y3: Fraction) -> bool:
    """Sum of V~_J V_I over S_{p,q,r,k} equals the single-pair symmetrized form
    divided by the orbit constant."""
    pairs = subset_pairs(p, q, r, k)
    if not pairs:
        raise ValueError(f"no subset pairs for (p={p}, q={q}, r={r}, k={k})")
    lhs = Fraction(0)
    for i_set, j_set in pairs:
        lhs += v_tilde_fn(j_set, t1, z, y2) * v_fn(i_set, t3, z, y3)
    i0, j0 = pairs[0]
    i0_check = tuple(sorted(k - 1 - i for i in i0))
    total = Fraction(0)
    for zp in itertools.permutations(z):
        total += (q_factor(zp) * v_fn(i0_check, t3, zp, y3)
                  * v_tilde_fn(j0, t1, tuple(reversed(zp)), y2))
    return lhs == total / orbit_constant(p, q, r, k)


def check_v_transforms(i_set: Subset, t, z, y: Fraction, a: int) -> bool:
    """The adjacent-swap identities for V and V~ in the z-variables."""
    k = len(z)
    if not 0 <= a < k - 1:
        raise ValueError(f"swap position out of range: {a}")
    z_sw = list(z)
    z_sw[a], z_sw[a + 1] = z_sw[a + 1], z_sw[a]
    z_sw = tuple(z_sw)
    swapped_set = tuple(sorted(a + 1 if i == a else a if i == a + 1 else i for i in i_set))

    d = z[a + 1] - z[a]
    if d == 0 or d == 1:
        raise PoleError("v-transform needs z_{a+1} - z_a outside {0, 1}")
    lhs = v_fn(i_set, t, z_sw, y)
    rhs = (d / (d - 1)) * v_fn(swapped_set, t, z, y) - v_fn(i_set, t, z, y) / (d - 1)
    if lhs != rhs:
        return False

    d = z[a] - z[a + 1]
    if d == 1:
        raise PoleError("v-transform needs z_a - z_{a+1} != 1")
    lhs = v_tilde_fn(i_set, t, z_sw, y)
    rhs = (d / (d - 1)) * v_tilde_fn(swapped_set, t, z, y) - v_tilde_fn(i_set, t, z, y) / (d - 1)
    return lhs == rhs
