"""Seeded sampling of generic rational parameter points.

A point fixes the three variable groups, the evaluation point x, and the
highest weight. All pairwise differences among the t-values and x are kept
outside {0, +1, -1}: 0 avoids every pole in every engine, and +-1 keeps the
shifted numerators and the deformed-permutation calculus away from accidental
zeros, so identity failures can never hide behind a degenerate sample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .gl2 import EvalModuleContext
from .verma import HighestWeight

_DENOMS = (1, 2, 3, 5, 7)
_BAD_DIFFS = (Fraction(0), Fraction(1), Fraction(-1))


@dataclass(frozen=True)
class ParamPoint:
    t: tuple[tuple[Fraction, ...], tuple[Fraction, ...], tuple[Fraction, ...]]
    x: Fraction
    hw: HighestWeight

    @property
    def ctx(self) -> EvalModuleContext:
        return EvalModuleContext(self.hw, self.x)


def random_rational(rng: random.Random, span: int = 40) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice(_DENOMS))


def generic_values(rng: random.Random, count: int, span: int = 40) -> tuple[Fraction, ...]:
    """count rationals whose pairwise differences avoid {0, +1, -1}."""
    vals: list[Fraction] = []
    while len(vals) < count:
        cand = random_rational(rng, span)
        if all(cand - v not in _BAD_DIFFS for v in vals):
            vals.append(cand)
    return tuple(vals)


def sample_weight(rng: random.Random) -> HighestWeight:
    return HighestWeight(tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 9))
                               for _ in range(4)))


def sample_point(rng: random.Random, shape: tuple[int, int, int]) -> ParamPoint:
    """A generic point for the given shape: x and all t's mutually generic."""
    n = sum(shape)
    vals = generic_values(rng, n + 1)
    x, rest = vals[0], vals[1:]
    t1 = rest[:shape[0]]
    t2 = rest[shape[0]:shape[0] + shape[1]]
    t3 = rest[shape[0] + shape[1]:]
    return ParamPoint((t1, t2, t3), x, sample_weight(rng))
