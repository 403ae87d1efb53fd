"""The RTT oracle engine for Y(gl4) weight functions, plus executable checks of
the splitting property and the gl2 exchange/coproduct formulas.

`weight_function_direct` evaluates the defining matrix entry of the ordered
product of T- and R-factors: the column basis state (2..2 3..3 4..4) is seeded
with the highest weight vector, the factors are applied right to left (R-blocks
first, then the T-blocks), and the coefficient at the row index (1..1 2..2 3..3)
is read off. R-factors act on the scalar auxiliary indices only; a T-factor
fans one auxiliary position out into module-operator images.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .comb import f_tilde, f_weight
from .exact import PoleError, q_factor
from .gl2 import (Conjugate, EvalModuleContext, Fundamental, Gl4Pullback,
                  Tensor, VermaEval, gl2_weight_function, gl4_t_apply)
from .linear import SparseVec, from_terms
from .verma import ModuleVector, unit_vector

Shape = tuple[int, int, int]

SHAPE_CAP = 6


def check_shape(shape: Shape) -> Shape:
    xi1, xi2, xi3 = shape
    if min(shape) < 0:
        raise ValueError(f"negative shape component: {shape}")
    if max(shape) > SHAPE_CAP:
        raise ValueError(f"shape component exceeds the cap {SHAPE_CAP}: {shape}")
    return shape


def t_apply(a: int, b: int, u: Fraction, vec: ModuleVector, ctx: EvalModuleContext) -> ModuleVector:
    """T^a_b(u) on the gl4 evaluation module."""
    return gl4_t_apply(a, b, u, vec, ctx)


def _group_offsets(shape: Shape) -> tuple[int, int, int]:
    xi1, xi2, _ = shape
    return (0, xi1, xi1 + xi2)


def weight_function_direct(shape: Shape, t, ctx: EvalModuleContext, prune: bool = True) -> ModuleVector:
    """The weight function B_xi(t) v computed from the RTT definition.

    t is the triple of variable groups (t1, t2, t3). With ``prune`` set (the
    default), each T-factor keeps only the output value its auxiliary position
    must carry in the extracted row entry; no later factor touches that
    position, so the restriction is exact. ``prune=False`` keeps the full
    fan-out for cross-checking.
    """
    check_shape(shape)
    t1, t2, t3 = (tuple(g) for g in t)
    if (len(t1), len(t2), len(t3)) != tuple(shape):
        raise ValueError(f"variable groups {tuple(map(len, (t1, t2, t3)))} do not match shape {shape}")
    groups = (t1, t2, t3)
    offs = _group_offsets(shape)
    n_aux = sum(shape)

    seed = (2,) * shape[0] + (3,) * shape[1] + (4,) * shape[2]
    row = (1,) * shape[0] + (2,) * shape[1] + (3,) * shape[2]
    state: dict = {seed: unit_vector()}

    # R-blocks [3,2], [3,1], [2,1] in writing order; application is reversed.
    r_factors: list[tuple[int, int, Fraction, str]] = []
    for gk, gj in ((2, 1), (2, 0), (1, 0)):
        for i in range(shape[gk]):
            for l in reversed(range(shape[gj])):
                u = groups[gk][i] - groups[gj][l]
                label = f"t{gk + 1}_{i + 1} - t{gj + 1}_{l + 1}"
                r_factors.append((offs[gk] + i, offs[gj] + l, u, label))
    for pos_i, pos_j, u, label in reversed(r_factors):
        if u == 0:
            raise PoleError(f"R-factor argument vanishes: {label} = 0")
        new_state: dict = {}
        inv_u = Fraction(1) / u
        for idx, vec in state.items():
            _acc_state(new_state, idx, vec)
            swapped = list(idx)
            swapped[pos_i], swapped[pos_j] = idx[pos_j], idx[pos_i]
            _acc_state(new_state, tuple(swapped), inv_u * vec)
        state = new_state

    # T-blocks [1], [2], [3] in writing order; apply [3], then [2], then [1].
    t_factors = []
    for g in (0, 1, 2):
        for k in range(shape[g]):
            t_factors.append((offs[g] + k, groups[g][k], g + 1))
    for pos, u, target in reversed(t_factors):
        new_state = {}
        for idx, vec in state.items():
            b = idx[pos]
            outs = (target,) if prune else (1, 2, 3, 4)
            for a in outs:
                img = t_apply(a, b, u, vec, ctx)
                if img:
                    new_idx = idx[:pos] + (a,) + idx[pos + 1:]
                    _acc_state(new_state, new_idx, img)
        state = new_state

    if n_aux == 0:
        return state.get((), SparseVec.zero())
    return state.get(row, SparseVec.zero())


def _acc_state(state: dict, idx, vec) -> None:
    cur = state.get(idx)
    cur = vec if cur is None else cur + vec
    if cur:
        state[idx] = cur
    else:
        state.pop(idx, None)


# ---------------------------------------------------------------------------
# RTT defining relations
# ---------------------------------------------------------------------------

def check_rtt(a: int, b: int, c: int, d: int, u: Fraction, v: Fraction,
              vec: ModuleVector, ctx: EvalModuleContext) -> bool:
    """(u-v)[T^a_b(u), T^c_d(v)] vec == (T^a_d(u)T^c_b(v) - T^a_d(v)T^c_b(u)) vec."""
    if u == v:
        raise PoleError("RTT check needs u != v")
    lhs = (u - v) * (t_apply(a, b, u, t_apply(c, d, v, vec, ctx), ctx)
                     - t_apply(c, d, v, t_apply(a, b, u, vec, ctx), ctx))
    rhs = (t_apply(a, d, u, t_apply(c, b, v, vec, ctx), ctx)
           - t_apply(a, d, v, t_apply(c, b, u, vec, ctx), ctx))
    return lhs == rhs


# ---------------------------------------------------------------------------
# splitting property
# ---------------------------------------------------------------------------

def _component_map(vec: SparseVec, n_aux: int) -> dict:
    """Split a Tensor-module vector into {aux-label-prefix: module part}."""
    comps: dict = {}
    for key, coeff in vec.items():
        pref, mkey = key[:n_aux], key[n_aux]
        comps.setdefault(pref, {})
        cur = comps[pref].get(mkey, 0) + coeff
        if cur:
            comps[pref][mkey] = cur
        else:
            comps[pref].pop(mkey, None)
    return {pref: SparseVec(d) for pref, d in comps.items() if d}


def splitting_rhs(shape: Shape, t, ctx: EvalModuleContext) -> ModuleVector:
    """Right side of the splitting formula, assembled from gl2 weight functions
    in L(t2_1) x ... x L(t2_xi2) x psi-pullback and in the opposite-coproduct
    module Lbar(t2_1) x ... x Lbar(t2_xi2) x phi-pullback, glued by the middle
    T-product."""
    check_shape(shape)
    t1, t2, t3 = (tuple(g) for g in t)
    xi2 = shape[1]

    psi_mod = Tensor([Fundamental(z) for z in t2] + [Gl4Pullback(ctx, 2)])
    psi_start = SparseVec.unit((1,) * xi2 + ((0, 0, 0, 0, 0, 0),))
    psi_full = gl2_weight_function(psi_mod, t3, psi_start)
    psi_comps = _component_map(psi_full, xi2)

    phi_mod = Tensor([Conjugate(z) for z in t2] + [Gl4Pullback(ctx, 0)], opposite=True)

    total = SparseVec.zero()
    for bm2, u_b in psi_comps.items():
        phi_start = from_terms(((2,) * xi2 + (mono,), c) for mono, c in u_b.items())
        phi_full = gl2_weight_function(phi_mod, t1, phi_start)
        for a_idx, w_ab in _component_map(phi_full, xi2).items():
            # middle factor T(t2_1)^{a_1}_{b_1} ... T(t2_xi2)^{a_xi2}_{b_xi2}
            vec = w_ab
            for i in reversed(range(xi2)):
                vec = t_apply(a_idx[i], bm2[i] + 2, t2[i], vec, ctx)
                if not vec:
                    break
            total = total + vec
    return total


def check_splitting(shape: Shape, t, ctx: EvalModuleContext) -> bool:
    return weight_function_direct(shape, t, ctx) == splitting_rhs(shape, t, ctx)


# ---------------------------------------------------------------------------
# gl2 identities: coproduct expansion, exchange formulas, w1/w2 formulas
# ---------------------------------------------------------------------------

def _apply_on_factor(tensor: Tensor, fac: int, a: int, b: int, u: Fraction,
                     vec: SparseVec) -> SparseVec:
    out = SparseVec.zero()
    for key, coeff in vec.items():
        img = tensor.factors[fac].t_apply(a, b, u, SparseVec.unit(key[fac], coeff))
        out = out + from_terms((key[:fac] + (k,) + key[fac + 1:], c) for k, c in img.items())
    return out


def coproduct_expansion_rhs(ts, tensor: Tensor, vec: SparseVec) -> SparseVec:
    """Right side of the two-tensor expansion of T12(t_1)...T12(t_xi):
    sum over eta of Sym-bar of (B_eta (x) B_{xi-eta}) dressed with T22/T11
    factors, divided by eta! (xi-eta)!."""
    xi = len(ts)
    total = SparseVec.zero()
    for eta in range(xi + 1):
        norm = Fraction(1, math.factorial(eta) * math.factorial(xi - eta))
        contrib = SparseVec.zero()
        for perm in itertools.permutations(ts):
            cur = vec
            for i in range(eta, xi):
                cur = _apply_on_factor(tensor, 0, 2, 2, perm[i], cur)
            for j in range(0, eta):
                cur = _apply_on_factor(tensor, 1, 1, 1, perm[j], cur)
            for i in reversed(range(0, eta)):
                cur = _apply_on_factor(tensor, 0, 1, 2, perm[i], cur)
            for j in reversed(range(eta, xi)):
                cur = _apply_on_factor(tensor, 1, 1, 2, perm[j], cur)
            contrib = contrib + q_factor(perm) * cur
        total = total + norm * contrib
    return total


def check_coproduct_expansion(ts, mod1, mod2, vec: SparseVec) -> bool:
    """Delta(T12(t_1)...T12(t_xi)) vec equals the symmetrized two-tensor sum."""
    tensor = Tensor([mod1, mod2])
    lhs = gl2_weight_function(tensor, ts, vec)
    return lhs == coproduct_expansion_rhs(ts, tensor, vec)


def check_exchange_formulas(u: Fraction, ts, module, vec: SparseVec) -> bool:
    """The T11- and T22-exchange formulas through a product of T12's."""
    ts = tuple(ts)
    b_vec = gl2_weight_function(module, ts, vec)

    for diag, shift, sign in ((1, -1, 1), (2, 1, -1)):
        lhs = module.t_apply(diag, diag, u, b_vec)
        coeff = Fraction(1)
        for ti in ts:
            d = u - ti
            if d == 0:
                raise PoleError(f"exchange formula needs u != t_i, got {u}")
            coeff *= (d + shift) / d
        rhs = coeff * gl2_weight_function(module, ts, module.t_apply(diag, diag, u, vec))
        for l in range(len(ts)):
            c = Fraction(1) / (u - ts[l])
            for m in range(len(ts)):
                if m != l:
                    d = ts[l] - ts[m]
                    if d == 0:
                        raise PoleError("exchange formula needs distinct t_i")
                    c *= (d + shift) / d
            rest = ts[:l] + ts[l + 1:]
            term = module.t_apply(diag, diag, ts[l], vec)
            term = module.t_apply(1, 2, u, term)
            term = gl2_weight_function(module, rest, term)
            rhs = rhs + sign * c * term
        if lhs != rhs:
            return False
    return True


def w1_rhs(ts, zs, vmod: VermaEval) -> SparseVec:
    """Subset-sum side of the weight-function formula on w1^(x k) (x) v."""
    xi, k = len(ts), len(zs)
    total = SparseVec.zero()
    for size in range(0, min(xi, k) + 1):
        for i_set in itertools.combinations(range(k), size):
            contrib = SparseVec.zero()
            for perm in itertools.permutations(ts):
                c = f_weight(i_set, perm, zs)
                for a in range(size):
                    c *= vmod.t_diag_eigenvalue(1, perm[a])
                w_part = tuple(2 if i in i_set else 1 for i in range(k))
                v_part = gl2_weight_function(vmod, perm[size:], SparseVec.unit(0))
                contrib = contrib + q_factor(perm) * c * from_terms(
                    (w_part + (m,), cm) for m, cm in v_part.items())
            total = total + Fraction(1, math.factorial(xi - size)) * contrib
    return total


def w2_rhs(ts, zs, vmod: VermaEval) -> SparseVec:
    """Subset-sum side of the weight-function formula on v (x) w2^(x k);
    tensor slots run V, Lbar(z_k), ..., Lbar(z_1), so z_i sits at slot k-i."""
    xi, k = len(ts), len(zs)
    total = SparseVec.zero()
    for size in range(0, min(xi, k) + 1):
        for i_set in itertools.combinations(range(k), size):
            contrib = SparseVec.zero()
            for perm in itertools.permutations(ts):
                c = f_tilde(i_set, perm, zs)
                for a in range(size):
                    c *= vmod.t_diag_eigenvalue(2, perm[xi - size + a])
                w_slots = [2] * k
                for i in i_set:
                    w_slots[k - 1 - i] = 1
                v_part = gl2_weight_function(vmod, perm[:xi - size], SparseVec.unit(0))
                contrib = contrib + q_factor(perm) * c * from_terms(
                    ((m,) + tuple(w_slots), cm) for m, cm in v_part.items())
            total = total + Fraction(1, math.factorial(xi - size)) * contrib
    return total


def check_w1_w2(xi: int, k: int, ts, zs, vmod: VermaEval) -> bool:
    """Both subset-sum formulas against the direct tensor-module action."""
    ts, zs = tuple(ts), tuple(zs)
    if len(ts) != xi or len(zs) != k:
        raise ValueError("variable counts do not match (xi, k)")
    mod1 = Tensor([Fundamental(z) for z in zs] + [vmod])
    lhs1 = gl2_weight_function(mod1, ts, SparseVec.unit((1,) * k + (0,)))
    if lhs1 != w1_rhs(ts, zs, vmod):
        return False
    mod2 = Tensor([vmod] + [Conjugate(zs[k - 1 - j]) for j in range(k)])
    lhs2 = gl2_weight_function(mod2, ts, SparseVec.unit((0,) + (2,) * k))
    return lhs2 == w2_rhs(ts, zs, vmod)
