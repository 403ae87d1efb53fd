"""Auxiliary tensor space (C^n)^(x N): sparse states, the rational R-matrix,
and positioned operator application.

States are dicts mapping index tuples (values in 1..n) to coefficients. The
coefficient type only needs addition, scaling by Fraction, and truthiness for
zero, so the same engine serves scalar Yang-Baxter checks (Fraction) and
module-valued weight-function assembly (SparseVec).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .exact import PoleError

AuxIndex = tuple[int, ...]


def r_entry(a: int, b: int, c: int, d: int, u: Fraction) -> Fraction:
    """Entry R^{ab}_{cd}(u) = d_ac d_bd + d_ad d_bc / u of the rational R-matrix."""
    if u == 0:
        raise PoleError("R-matrix argument u = 0")
    res = Fraction(0)
    if a == c and b == d:
        res += 1
    if a == d and b == c:
        res += Fraction(1) / u
    return res


def apply_r(pos_i: int, pos_j: int, u: Fraction, state: dict) -> dict:
    """Apply R^{(pos_i, pos_j)}(u) to a sparse state; positions are 0-based.

    Linear in the state; each input term produces at most two output terms
    (identity part and index swap weighted by 1/u).
    """
    if pos_i == pos_j:
        raise ValueError("R-matrix positions must differ")
    if u == 0:
        raise PoleError(f"R-matrix argument vanishes at positions ({pos_i}, {pos_j})")
    inv_u = Fraction(1) / u
    out: dict = {}
    for idx, coeff in state.items():
        c, d = idx[pos_i], idx[pos_j]
        _accumulate(out, idx, coeff)
        swapped = list(idx)
        swapped[pos_i], swapped[pos_j] = d, c
        _accumulate(out, tuple(swapped), inv_u * coeff)
    return out


def _accumulate(state: dict, idx: AuxIndex, coeff) -> None:
    s = state.get(idx)
    s = coeff if s is None else s + coeff
    if s:
        state[idx] = s
    else:
        state.pop(idx, None)


# ---------------------------------------------------------------------------
# dense matrices on (C^n)^(x 3) for the Yang-Baxter check
# ---------------------------------------------------------------------------

def r_matrix_positioned(pos_i: int, pos_j: int, u: Fraction, n: int, rank: int) -> list[list[Fraction]]:
    """Dense matrix of R^{(pos_i, pos_j)}(u) on (C^n)^(x rank), basis ordered
    lexicographically by index tuple."""
    basis = list(itertools.product(range(1, n + 1), repeat=rank))
    pos = {idx: i for i, idx in enumerate(basis)}
    dim = len(basis)
    zero = Fraction(0)
    mat = [[zero] * dim for _ in range(dim)]
    for col, idx in enumerate(basis):
        for out_idx, coeff in apply_r(pos_i, pos_j, u, {idx: Fraction(1)}).items():
            mat[pos[out_idx]][col] += coeff
    return mat


def mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact matrix product, skipping zero entries (R-matrices are very sparse)."""
    dim = len(a)
    zero = Fraction(0)
    out = [[zero] * dim for _ in range(dim)]
    for i in range(dim):
        row_a = a[i]
        row_out = out[i]
        for k in range(dim):
            aik = row_a[k]
            if aik:
                row_b = b[k]
                for j in range(dim):
                    if row_b[j]:
                        row_out[j] += aik * row_b[j]
    return out


def check_yang_baxter(u: Fraction, v: Fraction, n: int) -> bool:
    """R12(u-v) R13(u) R23(v) == R23(v) R13(u) R12(u-v) as exact n^3 x n^3 matrices."""
    if u == 0 or v == 0 or u == v:
        raise PoleError(f"Yang-Baxter arguments hit a pole: u={u}, v={v}")
    r12 = r_matrix_positioned(0, 1, u - v, n, 3)
    r13 = r_matrix_positioned(0, 2, u, n, 3)
    r23 = r_matrix_positioned(1, 2, v, n, 3)
    lhs = mat_mul(mat_mul(r12, r13), r23)
    rhs = mat_mul(mat_mul(r23, r13), r12)
    return lhs == rhs
