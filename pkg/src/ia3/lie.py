"""Free Lie algebra on an ordered alphabet, in its Hall basis.

Trees are nested tuples whose leaves are generator indices. A node [A, B]
belongs to the Hall set iff A > B in the weight-graded order and, when
A = [A1, A2], also A2 <= B. Normal forms go through the tensor algebra:
every Hall tree of a given weight is expanded to its iterated-commutator
tensor once, and coordinates of arbitrary Lie elements are found by exact
sparse elimination against those expansions.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from . import magnus
from .words import Alphabet, Word

HallTree = Union[int, Tuple]
Tensor = Dict[Tuple[int, ...], Fraction]


def tree_weight(tree: HallTree) -> int:
    if isinstance(tree, int):
        return 1
    return tree_weight(tree[0]) + tree_weight(tree[1])


def tree_leaves(tree: HallTree) -> Tuple[int, ...]:
    if isinstance(tree, int):
        return (tree,)
    return tree_leaves(tree[0]) + tree_leaves(tree[1])


def _order_key(tree: HallTree):
    if isinstance(tree, int):
        return (0, tree)
    return (1, _order_key(tree[0]), _order_key(tree[1]))


def _tree_lt(a: HallTree, b: HallTree) -> bool:
    wa, wb = tree_weight(a), tree_weight(b)
    if wa != wb:
        return wa < wb
    return _order_key(a) < _order_key(b)


def is_hall(tree: HallTree) -> bool:
    if isinstance(tree, int):
        return True
    a, b = tree
    if not (is_hall(a) and is_hall(b) and _tree_lt(b, a)):
        return False
    if isinstance(a, tuple) and _tree_lt(b, a[1]):
        return False
    return True


def tree_to_str(tree: HallTree, alphabet: Alphabet) -> str:
    """Weight <= 3 trees print flat and left-normed, deeper ones fully nested."""
    if isinstance(tree, int):
        return alphabet.names[tree]
    if tree_weight(tree) == 3 and isinstance(tree[0], tuple) and isinstance(tree[0][0], int):
        k, l = tree[0]
        return f"[{alphabet.names[k]},{alphabet.names[l]},{alphabet.names[tree[1]]}]"
    if tree_weight(tree) == 2:
        return f"[{alphabet.names[tree[0]]},{alphabet.names[tree[1]]}]"
    return f"[{tree_to_str(tree[0], alphabet)},{tree_to_str(tree[1], alphabet)}]"


def tree_from_str(text: str, alphabet: Alphabet) -> HallTree:
    """Parse flat left-normed lists '[a,b,c]' and nested forms '[[a,b],c]'."""
    pos = 0

    def parse() -> HallTree:
        nonlocal pos
        if text[pos] == "[":
            pos += 1
            items = [parse()]
            while text[pos] == ",":
                pos += 1
                items.append(parse())
            if text[pos] != "]":
                raise ValueError(f"expected ']' at {pos} in {text!r}")
            pos += 1
            tree = items[0]
            for item in items[1:]:
                tree = (tree, item)
            return tree
        start = pos
        while pos < len(text) and text[pos] not in ",]":
            pos += 1
        return alphabet.index(text[start:pos].strip())

    tree = parse()
    if pos != len(text):
        raise ValueError(f"trailing input in {text!r}")
    return tree


def witt_rank(n: int, k: int) -> int:
    """Rank of the weight-k layer of the free Lie ring on n generators:
    (1/k) * sum over d | k of mu(d) n^(k/d)."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    total = sum(_mobius(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0)
    assert total % k == 0
    return total // k


def _mobius(d: int) -> int:
    if d == 1:
        return 1
    out = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            out = -out
        p += 1
    if d > 1:
        out = -out
    return out


_BASIS_CACHE: Dict[Tuple[Alphabet, int], Tuple[HallTree, ...]] = {}


def hall_basis(alphabet: Alphabet, k: int) -> Tuple[HallTree, ...]:
    """Hall trees of weight k. Weight 3 comes back ordered by
    (middle, left, right) letter, the layout used for the weight-3 tables;
    other weights follow the canonical tree order."""
    key = (alphabet, k)
    if key in _BASIS_CACHE:
        return _BASIS_CACHE[key]
    if k < 1:
        raise ValueError("weight must be positive")
    by_weight: List[List[HallTree]] = [[]]
    by_weight.append(list(range(len(alphabet))))
    for w in range(2, k + 1):
        level: List[HallTree] = []
        for wa in range(1, w):
            for a in by_weight[wa]:
                for b in by_weight[w - wa]:
                    if not _tree_lt(b, a):
                        continue
                    if isinstance(a, tuple) and _tree_lt(b, a[1]):
                        continue
                    level.append((a, b))
        level.sort(key=_order_key)
        by_weight.append(level)
    basis = by_weight[k]
    if k == 3:
        basis = sorted(basis, key=lambda t: (t[0][1], t[0][0], t[1]))
    out = tuple(basis)
    assert len(out) == witt_rank(len(alphabet), k)
    _BASIS_CACHE[key] = out
    return out


@lru_cache(maxsize=None)
def expand_tree(tree: HallTree) -> Dict[Tuple[int, ...], int]:
    """Iterated-commutator tensor of a tree in the free associative ring."""
    if isinstance(tree, int):
        return {(tree,): 1}
    left, right = expand_tree(tree[0]), expand_tree(tree[1])
    out: Dict[Tuple[int, ...], int] = {}
    for m1, c1 in left.items():
        for m2, c2 in right.items():
            out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
            out[m2 + m1] = out.get(m2 + m1, 0) - c1 * c2
    return {m: c for m, c in out.items() if c}


class LieVector:
    """An exact rational combination of Hall trees of one weight."""

    __slots__ = ("alphabet", "weight", "coeffs")

    def __init__(self, alphabet: Alphabet, weight: int, coeffs: Dict[HallTree, Fraction] | None = None):
        self.alphabet = alphabet
        self.weight = weight
        self.coeffs: Dict[HallTree, Fraction] = {}
        if coeffs:
            for tree, c in coeffs.items():
                c = Fraction(c)
                if c:
                    if tree_weight(tree) != weight:
                        raise ValueError("mixed weights in a LieVector")
                    self.coeffs[tree] = c

    @classmethod
    def generator(cls, alphabet: Alphabet, which) -> "LieVector":
        idx = alphabet.index(which) if isinstance(which, str) else int(which)
        return cls(alphabet, 1, {idx: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "LieVector"):
        if self.alphabet != other.alphabet or self.weight != other.weight:
            raise ValueError("LieVectors live in different components")

    def __add__(self, other: "LieVector") -> "LieVector":
        self._check(other)
        coeffs = dict(self.coeffs)
        for tree, c in other.coeffs.items():
            coeffs[tree] = coeffs.get(tree, Fraction(0)) + c
        return LieVector(self.alphabet, self.weight, coeffs)

    def __sub__(self, other: "LieVector") -> "LieVector":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "LieVector":
        scalar = Fraction(scalar)
        return LieVector(
            self.alphabet, self.weight, {t: scalar * c for t, c in self.coeffs.items()}
        )

    def __neg__(self) -> "LieVector":
        return (-1) * self

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieVector)
            and self.alphabet == other.alphabet
            and self.weight == other.weight
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.alphabet, self.weight, frozenset(self.coeffs.items())))

    def coordinates(self, basis: Sequence[HallTree] | None = None) -> List[Fraction]:
        basis = hall_basis(self.alphabet, self.weight) if basis is None else basis
        return [self.coeffs.get(t, Fraction(0)) for t in basis]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def to_json_dict(self) -> Dict[str, str]:
        items = sorted(self.coeffs.items(), key=lambda kv: _order_key(kv[0]))
        return {tree_to_str(t, self.alphabet): str(c) for t, c in items}

    @classmethod
    def from_json_dict(cls, data: Dict[str, str], alphabet: Alphabet, weight: int) -> "LieVector":
        coeffs = {tree_from_str(k, alphabet): Fraction(v) for k, v in data.items()}
        return cls(alphabet, weight, coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for tree, c in sorted(self.coeffs.items(), key=lambda kv: _order_key(kv[0])):
            parts.append(f"{'+' if c > 0 else '-'} {abs(c) if abs(c) != 1 else ''}{tree_to_str(tree, self.alphabet)}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else out

    __repr__ = __str__

    def to_tensor(self) -> Tensor:
        out: Tensor = {}
        for tree, c in self.coeffs.items():
            for mono, m in expand_tree(tree).items():
                val = out.get(mono, Fraction(0)) + c * m
                if val:
                    out[mono] = val
                elif mono in out:
                    del out[mono]
        return out


class _HallSolver:
    """Sparse exact elimination that writes weight-k tensors in the Hall basis."""

    def __init__(self, alphabet: Alphabet, k: int):
        self.alphabet = alphabet
        self.k = k
        self.basis = hall_basis(alphabet, k)
        # pivot monomial -> (normalized column, expression in basis indices)
        self.pivots: Dict[Tuple[int, ...], Tuple[Tensor, Dict[int, Fraction]]] = {}
        for j, tree in enumerate(self.basis):
            col: Tensor = {m: Fraction(c) for m, c in expand_tree(tree).items()}
            combo: Dict[int, Fraction] = {j: Fraction(1)}
            col, ped = self._reduce(col)
            for mono, alpha in ped.items():
                pcol, pcombo = self.pivots[mono]
                for idx, c in pcombo.items():
                    combo[idx] = combo.get(idx, Fraction(0)) - alpha * c
            assert col, "a Hall tree expansion reduced to zero"
            lead = min(col)
            lead_c = col[lead]
            col = {m: c / lead_c for m, c in col.items()}
            combo = {i: c / lead_c for i, c in combo.items() if c}
            self.pivots[lead] = (col, combo)

    def _reduce(self, col: Tensor) -> Tuple[Tensor, Dict[Tuple[int, ...], Fraction]]:
        used: Dict[Tuple[int, ...], Fraction] = {}
        while True:
            hit = next((m for m in col if m in self.pivots), None)
            if hit is None:
                return col, used
            alpha = col[hit]
            used[hit] = used.get(hit, Fraction(0)) + alpha
            pcol, _ = self.pivots[hit]
            for mono, c in pcol.items():
                val = col.get(mono, Fraction(0)) - alpha * c
                if val:
                    col[mono] = val
                elif mono in col:
                    del col[mono]

    def solve(self, tensor: Tensor) -> Dict[int, Fraction] | None:
        col = {m: Fraction(c) for m, c in tensor.items() if c}
        col, used = self._reduce(col)
        if col:
            return None
        out: Dict[int, Fraction] = {}
        for mono, alpha in used.items():
            for idx, c in self.pivots[mono][1].items():
                val = out.get(idx, Fraction(0)) + alpha * c
                if val:
                    out[idx] = val
                elif idx in out:
                    del out[idx]
        return out


_SOLVER_CACHE: Dict[Tuple[Alphabet, int], _HallSolver] = {}


def _solver(alphabet: Alphabet, k: int) -> _HallSolver:
    key = (alphabet, k)
    if key not in _SOLVER_CACHE:
        _SOLVER_CACHE[key] = _HallSolver(alphabet, k)
    return _SOLVER_CACHE[key]


def tensor_to_hall(tensor: Dict[Tuple[int, ...], object], k: int, alphabet: Alphabet) -> LieVector:
    """Hall coordinates of a weight-k Lie element given as a tensor; raises
    if the tensor is not a Lie element of that weight."""
    for mono in tensor:
        if len(mono) != k:
            raise ValueError(f"monomial of degree {len(mono)} in a weight-{k} tensor")
        for idx in mono:
            if not 0 <= idx < len(alphabet):
                raise ValueError(f"generator index {idx} out of range")
    coords = _solver(alphabet, k).solve({m: Fraction(c) for m, c in tensor.items()})
    if coords is None:
        raise ValueError(f"tensor is not a Lie element of weight {k}")
    basis = hall_basis(alphabet, k)
    return LieVector(alphabet, k, {basis[i]: c for i, c in coords.items()})


def hall_to_tensor(vec: LieVector) -> Tensor:
    return vec.to_tensor()


def bracket(a: LieVector, b: LieVector) -> LieVector:
    """[a, b] computed in the tensor algebra and rewritten in the Hall basis."""
    if a.alphabet != b.alphabet:
        raise ValueError("operands over different alphabets")
    ta, tb = a.to_tensor(), b.to_tensor()
    out: Tensor = {}
    for m1, c1 in ta.items():
        for m2, c2 in tb.items():
            for mono, c in ((m1 + m2, c1 * c2), (m2 + m1, -c1 * c2)):
                val = out.get(mono, Fraction(0)) + c
                if val:
                    out[mono] = val
                elif mono in out:
                    del out[mono]
    return tensor_to_hall(out, a.weight + b.weight, a.alphabet)


def word_class(w: Word, k: int) -> LieVector:
    """Hall coordinates of the weight-k lower-central-series class of a word."""
    return tensor_to_hall(magnus.lcs_class(w, k), k, w.alphabet)
