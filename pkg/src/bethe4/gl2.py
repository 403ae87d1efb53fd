"""Y(gl2)-modules used by the splitting property and the exchange/coproduct checks.

The zoo:

* ``Fundamental(z)`` -- C^2 with T(u) acting through the rational R-matrix
  R(u - z); highest weight (1, 0), highest vector w1 (label 1).
* ``Conjugate(z)`` -- C^2 with T(u) acting through the transposed-and-flipped
  R(z - u); highest weight (0, -1), highest vector w2 (label 2).
* ``VermaEval(lam1, lam2, x)`` -- the gl2 evaluation Verma module, basis
  e21^m v labeled by the exponent m.
* ``Gl4Pullback(ctx, offset)`` -- an evaluation Y(gl4)-module seen as a
  Y(gl2)-module through T^a_b -> T^{a+offset}_{b+offset} (offset 0 or 2).
* ``Tensor(factors, opposite=False)`` -- tensor product acting through the
  coproduct, or through the opposite coproduct when ``opposite`` is set.

All vectors are SparseVec instances; tensor labels are tuples with one entry
per factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import PoleError
from .linear import SparseVec, from_terms
from .verma import HighestWeight, act_generator


@dataclass(frozen=True)
class EvalModuleContext:
    """A gl4 evaluation module: highest weight plus evaluation point."""
    hw: HighestWeight
    x: Fraction


def gl4_t_apply(a: int, b: int, u: Fraction, vec: SparseVec, ctx: EvalModuleContext) -> SparseVec:
    """T^a_b(u) on the evaluation module: d_ab + e_ba/(u - x). Note the transposition."""
    d = u - ctx.x
    if d == 0:
        raise PoleError(f"T-operator argument u = x = {u}")
    out = act_generator(b, a, vec, ctx.hw) * (Fraction(1) / d)
    if a == b:
        out = out + vec
    return out


class Fundamental:
    """L(z): C^2 with (T^a_b(u))^c_d = R^{ac}_{bd}(u - z)."""

    def __init__(self, z: Fraction):
        self.z = z

    def t_apply(self, a: int, b: int, u: Fraction, vec: SparseVec) -> SparseVec:
        d = u - self.z
        if d == 0:
            raise PoleError(f"L(z) T-operator argument u = z = {u}")
        out = vec if a == b else SparseVec.zero()
        ca = vec.get(a)
        if ca:
            out = out + SparseVec.unit(b, ca / d)
        return out


class Conjugate:
    """Lbar(z): C^2 with (T^a_b(u))^c_d = R^{da}_{cb}(z - u)."""

    def __init__(self, z: Fraction):
        self.z = z

    def t_apply(self, a: int, b: int, u: Fraction, vec: SparseVec) -> SparseVec:
        d = self.z - u
        if d == 0:
            raise PoleError(f"Lbar(z) T-operator argument u = z = {u}")
        out = vec if a == b else SparseVec.zero()
        cb = vec.get(b)
        if cb:
            out = out + SparseVec.unit(a, cb / d)
        return out


class VermaEval:
    """gl2 evaluation Verma module with highest weight (lam1, lam2) at point x.

    Basis e21^m v labeled by m; closed-form generator action."""

    def __init__(self, lam1: Fraction, lam2: Fraction, x: Fraction):
        self.lam1 = lam1
        self.lam2 = lam2
        self.x = x

    def _act(self, a: int, b: int, vec: SparseVec) -> SparseVec:
        l1, l2 = self.lam1, self.lam2
        terms = []
        for m, c in vec.items():
            if (a, b) == (1, 1):
                terms.append((m, c * (l1 - m)))
            elif (a, b) == (2, 2):
                terms.append((m, c * (l2 + m)))
            elif (a, b) == (2, 1):
                terms.append((m + 1, c))
            else:  # e12
                if m > 0:
                    terms.append((m - 1, c * m * (l1 - l2 - m + 1)))
        return from_terms(terms)

    def t_apply(self, a: int, b: int, u: Fraction, vec: SparseVec) -> SparseVec:
        d = u - self.x
        if d == 0:
            raise PoleError(f"VermaEval T-operator argument u = x = {u}")
        out = self._act(b, a, vec) * (Fraction(1) / d)
        if a == b:
            out = out + vec
        return out

    def t_diag_eigenvalue(self, a: int, u: Fraction) -> Fraction:
        """<T^a_a(u) v> on the highest vector: (u - x + lam^a)/(u - x)."""
        d = u - self.x
        if d == 0:
            raise PoleError(f"VermaEval eigenvalue argument u = x = {u}")
        lam = self.lam1 if a == 1 else self.lam2
        return (d + lam) / d


class Gl4Pullback:
    """A gl4 evaluation module as a Y(gl2)-module via T^a_b -> T^{a+o}_{b+o}."""

    def __init__(self, ctx: EvalModuleContext, offset: int):
        if offset not in (0, 2):
            raise ValueError("offset must be 0 (phi embedding) or 2 (psi embedding)")
        self.ctx = ctx
        self.offset = offset

    def t_apply(self, a: int, b: int, u: Fraction, vec: SparseVec) -> SparseVec:
        return gl4_t_apply(a + self.offset, b + self.offset, u, vec, self.ctx)


class Tensor:
    """Tensor product of Y(gl2)-modules.

    With ``opposite=False`` the action is through the coproduct
    T^a_b -> sum_c T^c_b (x) T^a_c (first factor gets T^c_b); with
    ``opposite=True`` through the opposite coproduct
    T^a_b -> sum_c T^a_c (x) T^c_b.
    """

    def __init__(self, factors: list, opposite: bool = False):
        if not factors:
            raise ValueError("empty tensor product")
        self.factors = list(factors)
        self.opposite = opposite
        self._rest = Tensor(self.factors[1:], opposite) if len(self.factors) > 1 else None

    def t_apply(self, a: int, b: int, u: Fraction, vec: SparseVec) -> SparseVec:
        out = SparseVec.zero()
        if self._rest is None:
            head = self.factors[0]
            for key, coeff in vec.items():
                img = head.t_apply(a, b, u, SparseVec.unit(key[0], coeff))
                out = out + from_terms(((k,), c) for k, c in img.items())
            return out
        for c in (1, 2):
            if self.opposite:
                first_ab, rest_ab = (a, c), (c, b)
            else:
                first_ab, rest_ab = (c, b), (a, c)
            for key, coeff in vec.items():
                head_img = self.factors[0].t_apply(*first_ab, u, SparseVec.unit(key[0]))
                if not head_img:
                    continue
                rest_img = self._rest.t_apply(*rest_ab, u, SparseVec.unit(key[1:], coeff))
                if not rest_img:
                    continue
                out = out + from_terms(
                    ((hk,) + rk, hc * rc)
                    for hk, hc in head_img.items()
                    for rk, rc in rest_img.items())
        return out


def tensor_unit(labels: tuple) -> SparseVec:
    """Basis vector of a Tensor module from one label per factor."""
    return SparseVec.unit(tuple(labels))


def gl2_weight_function(module, ts, vec: SparseVec) -> SparseVec:
    """T^1_2(t_1) ... T^1_2(t_k) applied to vec, rightmost factor first."""
    for u in reversed(ts):
        vec = module.t_apply(1, 2, u, vec)
    return vec
