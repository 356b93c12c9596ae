"""Automorphisms of a free group of rank n, acting on the right.

Composition follows the exponent convention x^(ab) = (x^a)^b, so evaluating
a word in the conjugation/commutator generators K_ij, K_ijl is a left-to-right
fold. The abelianization matrix rho stores images in rows, which makes
rho(ab) = rho(a) rho(b); a one-time self-check pins this orientation against
the elementary matrices.
"""
from __future__ import annotations

from typing import Dict, Iterable, Sequence, Tuple

from . import lie, magnus
from .words import Alphabet, Word, commutator, magnus_alphabet, magnus_indices, x_alphabet


class Automorphism:
    """A free-group endomorphism given by generator images; the ones built
    here are invertible by construction."""

    __slots__ = ("alphabet", "images")

    def __init__(self, images: Sequence[Word]):
        images = tuple(images)
        if not images:
            raise ValueError("need at least one image")
        self.alphabet = images[0].alphabet
        if len(images) != len(self.alphabet):
            raise ValueError("one image per generator required")
        if any(im.alphabet != self.alphabet for im in images):
            raise ValueError("images over mixed alphabets")
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, w: Word) -> Word:
        out = self.alphabet.one()
        for idx, sign in w:
            im = self.images[idx]
            out = out * (im if sign == 1 else im.inverse())
        return out

    def __call__(self, w: Word) -> Word:
        return self.apply(w)

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        """(self * other) sends x to other(self(x))."""
        if self.alphabet != other.alphabet:
            raise ValueError("automorphisms of different groups")
        return Automorphism(tuple(other.apply(im) for im in self.images))

    def is_identity(self) -> bool:
        return all(im == self.alphabet.gen(i) for i, im in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, Automorphism) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self) -> str:
        body = ", ".join(f"{self.alphabet.names[i]} -> {im}" for i, im in enumerate(self.images))
        return f"Automorphism({body})"

    def to_json_dict(self) -> Dict[str, str]:
        return {self.alphabet.names[i]: str(im) for i, im in enumerate(self.images)}


def identity_aut(n: int) -> Automorphism:
    ab = x_alphabet(n)
    return Automorphism(tuple(ab.gen(i) for i in range(n)))


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    return a * b


def magnus_gen(which, n: int = 3, sign: int = 1) -> Automorphism:
    """K_ij: x_i -> x_j^-1 x_i x_j and K_ijl: x_i -> x_i [x_j, x_l], with the
    closed-form inverse when sign is -1. Accepts a name like 'K312' or an
    index tuple; any pairwise distinct indices are allowed, and swapping the
    last two indices of a triple inverts the generator: K_ilj = K_ijl^-1."""
    idx = magnus_indices(which) if isinstance(which, str) else tuple(which)
    if len(set(idx)) != len(idx) or not all(1 <= t <= n for t in idx):
        raise ValueError(f"invalid Magnus generator indices {idx} for n={n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    ab = x_alphabet(n)
    images = [ab.gen(t) for t in range(n)]
    if len(idx) == 2:
        i, j = idx
        xi, xj = ab.gen(i - 1), ab.gen(j - 1)
        images[i - 1] = xj.inverse() * xi * xj if sign == 1 else xj * xi * xj.inverse()
    elif len(idx) == 3:
        i, j, l = idx
        xi, xj, xl = ab.gen(i - 1), ab.gen(j - 1), ab.gen(l - 1)
        comm = commutator(xj, xl) if sign == 1 else commutator(xl, xj)
        images[i - 1] = xi * comm
    else:
        raise ValueError(f"invalid Magnus generator indices {idx}")
    return Automorphism(tuple(images))


def e_aut(p: int, q: int, n: int = 3, sign: int = 1) -> Automorphism:
    """The transvection x_p -> x_p x_q (its inverse when sign is -1)."""
    if p == q or not (1 <= p <= n and 1 <= q <= n):
        raise ValueError(f"invalid transvection indices ({p}, {q})")
    ab = x_alphabet(n)
    images = [ab.gen(t) for t in range(n)]
    images[p - 1] = ab.gen(p - 1) * (ab.gen(q - 1) if sign == 1 else ab.gen(q - 1).inverse())
    return Automorphism(tuple(images))


def inner(i: int, n: int = 3) -> Automorphism:
    """Conjugation by x_i: every x_t -> x_i^-1 x_t x_i."""
    ab = x_alphabet(n)
    xi = ab.gen(i - 1)
    return Automorphism(tuple(ab.gen(t).conjugate(xi) for t in range(n)))


def iota_word(i: int, n: int = 3) -> Word:
    """The product of the K_ti over t != i, in increasing t; it evaluates to
    conjugation by x_i (checked in verify_iota)."""
    ab = magnus_alphabet(n)
    out = ab.one()
    for t in range(1, n + 1):
        if t != i:
            out = out * ab.gen(f"K{t}{i}")
    return out


def eval_word(w: Word, n: int = 3) -> Automorphism:
    """Evaluate a word over the Magnus alphabet to an automorphism."""
    out = identity_aut(n)
    for idx, sign in w:
        out = out * magnus_gen(w.alphabet.names[idx], n=n, sign=sign)
    return out


def verify_iota(n: int = 3) -> bool:
    return all(eval_word(iota_word(i, n), n) == inner(i, n) for i in range(1, n + 1))


_RHO_CHECKED: set[int] = set()


def rho(a: Automorphism) -> Tuple[Tuple[int, ...], ...]:
    """Abelianization matrix, row t = exponent sums of the image of x_t."""
    _ensure_rho_convention(a.n)
    return tuple(im.exponent_sums() for im in a.images)


def _ensure_rho_convention(n: int):
    """One-time orientation check: rho of the transvection x_p -> x_p x_q must
    be I + (unit at row p, column q), and rho must be multiplicative."""
    if n in _RHO_CHECKED:
        return
    _RHO_CHECKED.add(n)
    pairs = [(1, 2), (2, 1)] + ([(2, 3)] if n >= 3 else []) if n >= 2 else []
    for p, q in pairs:
        a = e_aut(p, q, n)
        mat = tuple(im.exponent_sums() for im in a.images)
        expect = tuple(
            tuple((1 if r == c else 0) + (1 if (r, c) == (p - 1, q - 1) else 0) for c in range(n))
            for r in range(n)
        )
        if mat != expect:
            _RHO_CHECKED.discard(n)
            raise AssertionError("abelianization orientation self-check failed")
    if n >= 2:
        a = e_aut(1, 2, n) * e_aut(2, 1, n)
        left = tuple(im.exponent_sums() for im in a.images)
        pa = tuple(im.exponent_sums() for im in e_aut(1, 2, n).images)
        pb = tuple(im.exponent_sums() for im in e_aut(2, 1, n).images)
        prod = tuple(
            tuple(sum(pa[r][s] * pb[s][c] for s in range(n)) for c in range(n)) for r in range(n)
        )
        if left != prod:
            _RHO_CHECKED.discard(n)
            raise AssertionError("rho failed to be multiplicative for rows-as-images")


def is_IA(a: Automorphism) -> bool:
    return rho(a) == tuple(
        tuple(1 if r == c else 0 for c in range(a.n)) for r in range(a.n)
    )


class JohnsonImage:
    """An element of Hom(H, L(k+1)): one weight-(k+1) Lie vector per x_t."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[lie.LieVector]):
        self.components = tuple(components)

    def __add__(self, other: "JohnsonImage") -> "JohnsonImage":
        return JohnsonImage(tuple(a + b for a, b in zip(self.components, other.components)))

    def __rmul__(self, scalar) -> "JohnsonImage":
        return JohnsonImage(tuple(scalar * c for c in self.components))

    def __sub__(self, other: "JohnsonImage") -> "JohnsonImage":
        return self + (-1) * other

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other) -> bool:
        return isinstance(other, JohnsonImage) and self.components == other.components

    def __repr__(self) -> str:
        names = self.components[0].alphabet.names if self.components else ()
        return " + ".join(f"{n}* (x) ({c})" for n, c in zip(names, self.components) if not c.is_zero()) or "0"

    def to_json_dict(self) -> Dict[str, Dict[str, str]]:
        out = {}
        for t, c in enumerate(self.components):
            if not c.is_zero():
                out[f"x{t + 1}"] = c.to_json_dict()
        return out


def tau(a: Automorphism, k: int) -> JohnsonImage:
    """The k-th Johnson image x_t -> class of x_t^-1 (x_t)^a in weight k+1.

    Requires every x_t^-1 (x_t)^a to lie in the (k+1)-st lower central
    subgroup; the error names the offending generator otherwise.
    """
    comps = []
    for t in range(a.n):
        xt = a.alphabet.gen(t)
        w = xt.inverse() * a.images[t]
        try:
            comps.append(lie.word_class(w, k + 1))
        except ValueError as err:
            raise ValueError(
                f"automorphism is not in the weight-{k} Andreadakis layer: "
                f"generator x{t + 1}: {err}"
            ) from None
    return JohnsonImage(comps)
