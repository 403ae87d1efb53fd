"""Sparse linear combinations over the rationals.

`SparseVec` is the one vector type used everywhere: module vectors over a PBW
basis, vectors of gl2 modules, tensor products. Keys are arbitrary hashable
basis labels, values are nonzero Fractions; the representation is canonical
(no stored zeros), so `==` is mathematical equality. Instances are treated as
immutable: every operation returns a fresh vector.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Iterator


class SparseVec:
    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {k: v for k, v in terms.items() if v != 0}

    @classmethod
    def unit(cls, key: Hashable, coeff: Fraction | int = 1) -> "SparseVec":
        v = cls()
        if coeff != 0:
            v.terms[key] = Fraction(coeff)
        return v

    @classmethod
    def zero(cls) -> "SparseVec":
        return cls()

    def items(self) -> Iterator[tuple[Hashable, Fraction]]:
        return iter(self.terms.items())

    def get(self, key: Hashable) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparseVec):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __add__(self, other: "SparseVec") -> "SparseVec":
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = SparseVec()
        res.terms = out
        return res

    def __sub__(self, other: "SparseVec") -> "SparseVec":
        return self + (-1) * other

    def __neg__(self) -> "SparseVec":
        return (-1) * self

    def __rmul__(self, scalar) -> "SparseVec":
        if scalar == 0:
            return SparseVec()
        res = SparseVec()
        res.terms = {k: scalar * v for k, v in self.terms.items()}
        return res

    def __mul__(self, scalar) -> "SparseVec":
        return self.__rmul__(scalar)

    def __repr__(self) -> str:
        if not self.terms:
            return "SparseVec(0)"
        parts = [f"{v}*{k}" for k, v in sorted(self.terms.items(), key=lambda kv: repr(kv[0]))]
        return "SparseVec(" + " + ".join(parts) + ")"


def accumulate(acc: dict, key: Hashable, coeff: Fraction) -> None:
    """In-place accumulation helper for building vectors term by term."""
    s = acc.get(key, 0) + coeff
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def from_terms(pairs: Iterable[tuple[Hashable, Fraction]]) -> SparseVec:
    acc: dict = {}
    for k, v in pairs:
        accumulate(acc, k, v)
    res = SparseVec()
    res.terms = acc
    return res
