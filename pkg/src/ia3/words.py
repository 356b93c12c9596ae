"""Reduced words in a free group over a finite ordered alphabet.

Letters are stored as (generator index, sign) pairs with sign +1 or -1,
and every Word is freely reduced on construction, so equality of words
is equality in the free group.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Tuple

Letter = Tuple[int, int]


class Alphabet:
    """An ordered set of generator names; the position gives the total order."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        for name in names:
            if not name or "*" in name or "^" in name or "." in name:
                raise ValueError(f"invalid generator name {name!r}")
        self.names = names
        self._index = {name: k for k, name in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"{name!r} is not a generator of {self!r}") from None

    def one(self) -> "Word":
        return Word(self, ())

    def gen(self, which, sign: int = 1) -> "Word":
        """The one-letter word for a generator, given by name or index."""
        idx = self.index(which) if isinstance(which, str) else int(which)
        if not 0 <= idx < len(self.names):
            raise ValueError(f"generator index {idx} out of range")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return Word(self, ((idx, sign),))

    def word(self, text: str) -> "Word":
        """Parse '*'-separated letters such as 'x1*x2^-1'; '1' is the identity."""
        text = text.strip()
        if text == "1" or text == "":
            return self.one()
        letters = []
        for token in text.split("*"):
            token = token.strip()
            if token.endswith("^-1"):
                letters.append((self.index(token[:-3]), -1))
            else:
                letters.append((self.index(token), 1))
        return Word(self, letters)


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: list[Letter] = []
    for idx, sign in letters:
        if stack and stack[-1][0] == idx and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((idx, sign))
    return tuple(stack)


class Word:
    """A freely reduced word; multiplication reduces eagerly."""

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet: Alphabet, letters: Iterable[Letter] = ()):
        self.alphabet = alphabet
        self.letters = _reduce(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise ValueError("words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.alphabet, tuple((i, -s) for i, s in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.alphabet.one()
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self, g: "Word") -> "Word":
        """self^g = g^-1 * self * g."""
        return g.inverse() * self * g

    def exponent_sums(self) -> Tuple[int, ...]:
        sums = [0] * len(self.alphabet)
        for idx, sign in self.letters:
            sums[idx] += sign
        return tuple(sums)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.alphabet == other.alphabet
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.letters))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for idx, sign in self.letters:
            name = self.alphabet.names[idx]
            parts.append(name if sign == 1 else name + "^-1")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Word({self})"


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


def left_normed(items: Sequence[Word]) -> Word:
    """[y1, y2, ..., yk] = [[...[y1, y2], ...], yk]; a single item is itself."""
    if not items:
        raise ValueError("left_normed needs at least one word")
    out = items[0]
    for item in items[1:]:
        out = commutator(out, item)
    return out


def x_alphabet(n: int) -> Alphabet:
    """Free group basis x1..xn."""
    if n < 1:
        raise ValueError("n must be positive")
    return Alphabet(tuple(f"x{i}" for i in range(1, n + 1)))


def magnus_alphabet(n: int) -> Alphabet:
    """The n(n-1) + n(n-1)(n-2)/2 conjugation/commutator symbols, ordered
    K{ij} by (i, j) and then K{ijl} by (i, j, l) with j < l.

    For n = 3 this is K12 < K13 < K21 < K23 < K31 < K32 < K123 < K213 < K312.
    """
    if not 2 <= n <= 9:
        raise ValueError("n must be between 2 and 9")
    names = [f"K{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for l in range(j + 1, n + 1):
                if i != j and i != l:
                    names.append(f"K{i}{j}{l}")
    return Alphabet(tuple(names))


def magnus_indices(name: str) -> Tuple[int, ...]:
    """Indices of a Magnus symbol name: 'K12' -> (1, 2), 'K312' -> (3, 1, 2)."""
    if not name.startswith("K") or not name[1:].isdigit() or len(name) not in (3, 4):
        raise ValueError(f"{name!r} is not a Magnus symbol name")
    idx = tuple(int(c) for c in name[1:])
    if len(set(idx)) != len(idx):
        raise ValueError(f"{name!r} has repeated indices")
    return idx


def magnus_name(indices: Sequence[int]) -> str:
    if len(indices) not in (2, 3) or len(set(indices)) != len(indices):
        raise ValueError(f"invalid Magnus symbol indices {tuple(indices)}")
    return "K" + "".join(str(i) for i in indices)
