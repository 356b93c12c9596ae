"""The 18 defining relators of the degree-2 relator module."""

import json
import shutil
from importlib import resources

import pytest

from ia3 import autfn, lie, relations
from ia3.magnus import gamma_degree
from ia3.words import magnus_alphabet

EXPECTED_IDS = (
    "R1-1", "R1-2", "R1-3",
    "R2-1", "R2-2", "R2-3", "R2-4", "R2-5", "R2-6",
    "R3-1", "R3-2", "R3-3", "R3-4", "R3-5", "R3-6",
    "R4-1", "R4-2", "R4-3",
)


def test_inventory():
    specs = relations.load_relators()
    assert relations.relator_ids(specs) == EXPECTED_IDS


def test_every_relator_holds_and_matches_its_class():
    specs = relations.load_relators()
    for rid in EXPECTED_IDS:
        assert relations.verify_relator(rid, specs), rid


def test_relator_words_are_relations_of_the_group():
    specs = relations.load_relators()
    for rid, spec in specs.items():
        assert autfn.eval_word(spec.word).is_identity(), rid
        assert all(s == 0 for s in spec.word.exponent_sums()), rid
        assert gamma_degree(spec.word) == 2, rid


def test_stated_classes_rederive_from_words():
    specs = relations.load_relators()
    for rid, spec in specs.items():
        assert lie.word_class(spec.word, 2) == spec.stated_class, rid


def test_class_rank_is_18():
    assert relations.relator_rank() == 18
    assert relations.rank_formula(3) == 18


def test_class_matrix_shape():
    mat, ids, trees = relations.class_matrix()
    assert ids == EXPECTED_IDS
    assert len(mat) == 18
    assert len(mat[0]) == len(trees) == lie.witt_rank(9, 2) == 36


def test_instantiation_choice_is_auditable():
    specs = relations.load_relators()
    spec = specs["R1-1"]
    matches = relations.instantiation_search("R1-1", specs)
    assert (spec.template, spec.indices, spec.variant) in matches


def test_load_from_explicit_path(tmp_path):
    packaged = resources.files("ia3.data").joinpath("relators.json")
    copy = tmp_path / "relators.json"
    shutil.copyfile(str(packaged), copy)
    specs = relations.load_relators(str(copy))
    assert relations.relator_ids(specs) == EXPECTED_IDS


def test_tampered_word_is_rejected(tmp_path):
    packaged = resources.files("ia3.data").joinpath("relators.json")
    records = json.loads(packaged.read_text())
    records[0]["word"] = "K12*K13"
    bad = tmp_path / "relators.json"
    bad.write_text(json.dumps(records))
    with pytest.raises(ValueError):
        relations.load_relators(str(bad))


def test_template_words_reduce_to_identity_automorphism():
    alpha = magnus_alphabet(3)
    for template, indices, variant in [("R1", (3, 2, 1), "swapped"),
                                       ("R3", (2, 3, 1), "inverse"),
                                       ("R4", (1, 2, 3), "direct")]:
        w = relations.template_word(alpha, template, indices, variant)
        assert autfn.eval_word(w).is_identity()
