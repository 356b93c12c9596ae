"""Relator words among the Magnus generators and their degree-2 classes.

Four commutator templates R1..R4, instantiated at index triples, produce 18
words that evaluate to the identity automorphism of the free group of rank 3.
Their images in the degree-2 part of the free Lie algebra on the nine
generator symbols span a rank-18 lattice; the instantiations are shipped as
data and every load re-derives the words from their templates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import permutations

from . import lie
from .linalg import rank_exact
from .words import Alphabet, Word, commutator, magnus_alphabet

TEMPLATES = ("R1", "R2", "R3", "R4")

#: variants record how a shipped word is normalized relative to the raw
#: template: the stated classes fix signs that the raw commutator cannot
#: always reach, so some ids ship the swapped or inverted word.
VARIANTS = ("direct", "swapped", "inverse")


def _triple(alphabet: Alphabet, i: int, j: int, l: int) -> Word:
    # K{ijl} with j > l is the inverse of the canonical generator K{ilj}
    if j < l:
        return alphabet.gen(f"K{i}{j}{l}")
    return alphabet.gen(f"K{i}{l}{j}", sign=-1)


def template_word(alphabet: Alphabet, template: str, indices: tuple[int, int, int],
                  variant: str = "direct") -> Word:
    """Instantiate a relator template at the index triple (i, j, k)."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    i, j, k = indices
    gen = alphabet.gen
    if template == "R1":
        a, b = gen(f"K{i}{j}"), gen(f"K{k}{j}")
    elif template == "R2":
        a, b = gen(f"K{i}{k}") * gen(f"K{j}{k}"), gen(f"K{i}{j}")
    elif template == "R3":
        a, b = gen(f"K{i}{j}") * gen(f"K{k}{j}"), _triple(alphabet, i, j, k)
    elif template == "R4":
        if variant == "swapped":
            raise ValueError("R4 is not a plain commutator; swapped is undefined")
        conj = gen(f"K{i}{k}") * gen(f"K{j}{k}")
        word = (commutator(conj, _triple(alphabet, k, i, j)) * conj
                * commutator(gen(f"K{i}{j}"), gen(f"K{k}{i}") * gen(f"K{j}{i}"))
                * conj.inverse())
        return word.inverse() if variant == "inverse" else word
    else:
        raise ValueError(f"unknown template {template!r}")
    if variant == "swapped":
        a, b = b, a
    word = commutator(a, b)
    return word.inverse() if variant == "inverse" else word


@dataclass(frozen=True)
class RelatorSpec:
    """One instantiated relator: its word and its stated degree-2 class."""

    id: str
    template: str
    indices: tuple[int, int, int]
    variant: str
    word: Word
    stated_class: lie.LieVector


def _class_from_terms(alphabet: Alphabet, terms) -> lie.LieVector:
    out = lie.LieVector(alphabet, 2)
    for coeff, left, right in terms:
        tree = (alphabet.index(left), alphabet.index(right))
        out = out + int(coeff) * lie.LieVector(alphabet, 2, {tree: Fraction(1)})
    return out


_cache: dict[str, dict[str, RelatorSpec]] = {}


def load_relators(path: str | None = None) -> dict[str, RelatorSpec]:
    """Load the shipped relator data, re-deriving each word from its template.

    A stored word that disagrees with its template instantiation is a hard
    failure: the data file is bookkeeping, the templates are the source.
    """
    key = path or ""
    if key in _cache:
        return _cache[key]
    if path is None:
        text = resources.files("ia3.data").joinpath("relators.json").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    alphabet = magnus_alphabet(3)
    specs: dict[str, RelatorSpec] = {}
    for rec in json.loads(text):
        rid = rec["id"]
        indices = tuple(rec["indices"])
        word = alphabet.word(rec["word"])
        rebuilt = template_word(alphabet, rec["template"], indices, rec["variant"])
        if rebuilt != word:
            raise ValueError(f"stored word for {rid} does not match its template")
        specs[rid] = RelatorSpec(
            id=rid,
            template=rec["template"],
            indices=indices,
            variant=rec["variant"],
            word=word,
            stated_class=_class_from_terms(alphabet, rec["stated_class"]),
        )
    if len(specs) != 18:
        raise ValueError(f"expected 18 relators, found {len(specs)}")
    _cache[key] = specs
    return specs


def relator_ids(specs: dict[str, RelatorSpec] | None = None) -> tuple[str, ...]:
    return tuple((specs or load_relators()).keys())


def relator_word(rid: str, specs: dict[str, RelatorSpec] | None = None) -> Word:
    specs = specs or load_relators()
    if rid not in specs:
        raise KeyError(f"unknown relator id {rid!r}")
    return specs[rid].word


def verify_relator(rid: str, specs: dict[str, RelatorSpec] | None = None) -> bool:
    """True iff the word acts as the identity automorphism."""
    from . import autfn

    return autfn.eval_word(relator_word(rid, specs)).is_identity()


def degree2_class(rid: str, specs: dict[str, RelatorSpec] | None = None) -> lie.LieVector:
    """Degree-2 class of the relator word, checked against the stated class."""
    specs = specs or load_relators()
    got = lie.word_class(relator_word(rid, specs), 2)
    if got != specs[rid].stated_class:
        raise ValueError(f"degree-2 class of {rid} does not match its stated class")
    return got


def class_matrix(specs: dict[str, RelatorSpec] | None = None):
    """Rows of degree-2 class coordinates, one per relator, 36 columns."""
    specs = specs or load_relators()
    alphabet = magnus_alphabet(3)
    basis = lie.hall_basis(alphabet, 2)
    rows = [degree2_class(rid, specs).coordinates(basis) for rid in specs]
    return rows, tuple(specs), basis


def relator_rank(specs: dict[str, RelatorSpec] | None = None) -> int:
    rows, _, _ = class_matrix(specs)
    return rank_exact(rows)


def rank_formula(n: int) -> int:
    """Closed form for the rank of the degree-2 relator module at rank n."""
    value = (Fraction(1, 8) * n ** 2 * (n - 1) * (n ** 3 - n ** 2 - 2)
             - Fraction(1, 6) * n * (2 * n ** 3 - 5 * n - 3))
    if value.denominator != 1:
        raise ArithmeticError(f"rank formula is not integral at n={n}")
    return int(value)


def instantiation_search(rid: str, specs: dict[str, RelatorSpec] | None = None):
    """All (template, indices, variant) whose word realizes the stated class.

    The stated classes do not pin down the index triples by themselves, so
    the chosen instantiations are data; this search makes the choice
    auditable.  Distinct labels may realize the same word (a swapped
    commutator at reversed indices, or an inverse), so callers interested in
    genuine ambiguity should dedupe by word.
    """
    specs = specs or load_relators()
    from . import autfn

    alphabet = magnus_alphabet(3)
    target = specs[rid].stated_class
    matches = []
    for template in TEMPLATES:
        variants = ("direct", "inverse") if template == "R4" else VARIANTS
        for indices in permutations((1, 2, 3)):
            for variant in variants:
                word = template_word(alphabet, template, indices, variant)
                if not autfn.eval_word(word).is_identity():
                    continue
                if lie.word_class(word, 2) == target:
                    matches.append((template, indices, variant))
    return matches
