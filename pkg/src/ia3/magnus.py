"""Truncated Magnus expansion x_i -> 1 + X_i into noncommutative power series.

A word maps to a series in Z<<X_1..X_n>> truncated above a degree cap; the
lowest nonvanishing degree of (expansion - 1) detects membership in the
lower central series of the free group, and the homogeneous part in that
degree is the word's class in the associated graded Lie ring.
"""
from __future__ import annotations

from typing import Dict, Tuple

from .words import Alphabet, Word

Monomial = Tuple[int, ...]


class NcSeries:
    """A noncommutative polynomial truncated above degree `cap`.

    Terms map monomials (tuples of generator indices) to coefficients; the
    empty tuple is the constant term. Zero coefficients are dropped.
    """

    __slots__ = ("alphabet", "cap", "terms")

    def __init__(self, alphabet: Alphabet, cap: int, terms: Dict[Monomial, int] | None = None):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.alphabet = alphabet
        self.cap = cap
        self.terms: Dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff and len(mono) <= cap:
                    self.terms[mono] = coeff

    @classmethod
    def one(cls, alphabet: Alphabet, cap: int) -> "NcSeries":
        return cls(alphabet, cap, {(): 1})

    @classmethod
    def gen(cls, alphabet: Alphabet, cap: int, idx: int, sign: int) -> "NcSeries":
        """Expansion of a single letter: 1 + X for x, sum of (-X)^m for x^-1."""
        if sign == 1:
            return cls(alphabet, cap, {(): 1, (idx,): 1})
        terms = {(idx,) * m: (-1) ** m for m in range(cap + 1)}
        return cls(alphabet, cap, terms)

    def _check(self, other: "NcSeries"):
        if self.alphabet != other.alphabet or self.cap != other.cap:
            raise ValueError("series are not over the same truncated algebra")

    def __add__(self, other: "NcSeries") -> "NcSeries":
        self._check(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return NcSeries(self.alphabet, self.cap, terms)

    def __sub__(self, other: "NcSeries") -> "NcSeries":
        self._check(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, 0) - coeff
        return NcSeries(self.alphabet, self.cap, terms)

    def __mul__(self, other: "NcSeries") -> "NcSeries":
        self._check(other)
        cap = self.cap
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            room = cap - len(m1)
            for m2, c2 in other.terms.items():
                if len(m2) <= room:
                    mono = m1 + m2
                    terms[mono] = terms.get(mono, 0) + c1 * c2
        return NcSeries(self.alphabet, self.cap, terms)

    def degree_part(self, k: int) -> Dict[Monomial, int]:
        return {m: c for m, c in self.terms.items() if len(m) == k}

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NcSeries)
            and self.alphabet == other.alphabet
            and self.cap == other.cap
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"NcSeries(cap={self.cap}, {len(self.terms)} terms)"

    def to_json_dict(self) -> Dict[str, int]:
        """Monomials as dot-joined generator names; '1' is the constant term."""
        out = {}
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            key = ".".join(self.alphabet.names[i] for i in mono) if mono else "1"
            out[key] = self.terms[mono]
        return out


def expand(w: Word, cap: int) -> NcSeries:
    """Magnus expansion of a word, truncated above degree `cap`."""
    out = NcSeries.one(w.alphabet, cap)
    for idx, sign in w:
        out = out * NcSeries.gen(w.alphabet, cap, idx, sign)
    return out


def gamma_degree(w: Word, cap: int = 4) -> int:
    """Smallest k <= cap with a nonzero degree-k part of expand(w) - 1.

    Returns cap + 1 when every part up to the cap vanishes (in particular for
    the identity), so `gamma_degree(w, cap) >= k` witnesses w in the k-th
    lower central subgroup whenever k <= cap.
    """
    series = expand(w, cap)
    for k in range(1, cap + 1):
        if series.degree_part(k):
            return k
    return cap + 1


def lcs_class(w: Word, k: int) -> Dict[Monomial, int]:
    """Degree-k homogeneous part of expand(w), for w in the k-th lower
    central subgroup; raises if a lower-degree part is nonzero."""
    series = expand(w, k)
    for d in range(1, k):
        if series.degree_part(d):
            raise ValueError(
                f"word has a nonzero Magnus part in degree {d}, "
                f"so it is not in the degree-{k} lower central subgroup"
            )
    return series.degree_part(k)
