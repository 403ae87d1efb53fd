"""The gl4 Verma module: fixed-order PBW basis and exact generator action.

Basis monomials are e32^m32 e31^m31 e42^m42 e41^m41 e21^m21 e43^m43 v, encoded
as the exponent 6-tuple (m32, m31, m42, m41, m21, m43). The factor order is the
whole point: the closed coefficient formulas of the combinatorial engines are
stated relative to it.

Generator action is implemented by rewriting free words of generators with the
gl_n bracket [e_ab, e_cd] = d_bc e_ad - d_da e_cb, bubbling non-lowering letters
to the right where they annihilate (raising) or scale (diagonal) the highest
weight vector. Each swap either shortens the word or removes an inversion, so
the rewriting terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linear import SparseVec, accumulate

# PBW factor order; position in this tuple is the sort key for normal ordering.
PBW_ORDER: tuple[tuple[int, int], ...] = ((3, 2), (3, 1), (4, 2), (4, 1), (2, 1), (4, 3))
_PBW_INDEX = {pair: i for i, pair in enumerate(PBW_ORDER)}
_NON_LOWERING = 10  # sort key for raising/diagonal letters: bubble to the right

PbwMonomial = tuple[int, int, int, int, int, int]
UNIT_MONO: PbwMonomial = (0, 0, 0, 0, 0, 0)

ModuleVector = SparseVec


@dataclass(frozen=True)
class HighestWeight:
    lam: tuple[Fraction, Fraction, Fraction, Fraction]


def unit_vector() -> ModuleVector:
    """The highest weight vector v itself."""
    return SparseVec.unit(UNIT_MONO)


def monomial_word(mono: PbwMonomial) -> tuple[tuple[int, int], ...]:
    """The PBW monomial as a word of generator letters, in basis order."""
    word: list[tuple[int, int]] = []
    for pair, exp in zip(PBW_ORDER, mono):
        word.extend([pair] * exp)
    return tuple(word)


def _letter_key(letter: tuple[int, int]) -> int:
    return _PBW_INDEX.get(letter, _NON_LOWERING)


def normal_order(word: tuple[tuple[int, int], ...], hw: HighestWeight) -> ModuleVector:
    """Expand word . v in the ordered PBW basis.

    word is a sequence of (a, b) letters standing for e_ab, leftmost letter
    applied last.
    """
    lam = hw.lam
    acc: dict = {}
    stack: list[tuple[Fraction, tuple[tuple[int, int], ...]]] = [(Fraction(1), tuple(word))]
    while stack:
        coeff, w = stack.pop()
        swap_at = -1
        for i in range(len(w) - 1):
            if _letter_key(w[i]) > _letter_key(w[i + 1]):
                swap_at = i
                break
        if swap_at >= 0:
            i = swap_at
            (a, b), (c, d) = w[i], w[i + 1]
            stack.append((coeff, w[:i] + ((c, d), (a, b)) + w[i + 2:]))
            if b == c:
                stack.append((coeff, w[:i] + ((a, d),) + w[i + 2:]))
            if d == a:
                stack.append((-coeff, w[:i] + ((c, b),) + w[i + 2:]))
            continue
        # sorted: any non-lowering letters sit at the tail, act on v directly
        while w and _letter_key(w[-1]) == _NON_LOWERING:
            a, b = w[-1]
            if a < b:
                coeff = Fraction(0)
                break
            coeff *= lam[a - 1]
            w = w[:-1]
        if coeff:
            counts = [0, 0, 0, 0, 0, 0]
            for letter in w:
                counts[_PBW_INDEX[letter]] += 1
            accumulate(acc, tuple(counts), coeff)
    return SparseVec(acc)


@lru_cache(maxsize=None)
def _act_on_monomial(a: int, b: int, mono: PbwMonomial,
                     lam: tuple[Fraction, ...]) -> ModuleVector:
    hw = HighestWeight(lam)
    return normal_order(((a, b),) + monomial_word(mono), hw)


def act_generator(a: int, b: int, vec: ModuleVector, hw: HighestWeight) -> ModuleVector:
    """The exact image of vec under e_ab, re-expressed in the PBW basis."""
    if not 1 <= a <= 4 or not 1 <= b <= 4:
        raise ValueError(f"generator indices out of range: ({a}, {b})")
    out: dict = {}
    for mono, coeff in vec.items():
        for m2, c2 in _act_on_monomial(a, b, mono, hw.lam).items():
            accumulate(out, m2, coeff * c2)
    return SparseVec(out)


def weight_of(mono: PbwMonomial, hw: HighestWeight) -> tuple[Fraction, ...]:
    """The gl4 weight of mono . v: each letter e_ab shifts by +1 at a, -1 at b."""
    shifts = [0, 0, 0, 0]
    for (a, b), exp in zip(PBW_ORDER, mono):
        shifts[a - 1] += exp
        shifts[b - 1] -= exp
    return tuple(l + s for l, s in zip(hw.lam, shifts))


# ---------------------------------------------------------------------------
# serialization: monomial -> "[m32,m31,m42,m41,m21,m43]", vector -> JSON object
# ---------------------------------------------------------------------------

def monomial_key(mono: PbwMonomial) -> str:
    return "[" + ",".join(str(m) for m in mono) + "]"


def parse_monomial_key(key: str) -> PbwMonomial:
    inner = key.strip()[1:-1]
    parts = tuple(int(p) for p in inner.split(",")) if inner else ()
    if len(parts) != 6 or any(p < 0 for p in parts):
        raise ValueError(f"not a PBW exponent list: {key!r}")
    return parts


def vector_to_json(vec: ModuleVector) -> dict[str, str]:
    return {monomial_key(m): str(c) for m, c in sorted(vec.items())}


def vector_from_json(doc: dict[str, str]) -> ModuleVector:
    acc: dict = {}
    for key, val in doc.items():
        accumulate(acc, parse_monomial_key(key), Fraction(val))
    return SparseVec(acc)
