"""The relator-by-generator bracket matrix and its cokernel bookkeeping."""

import csv
import random
from fractions import Fraction
from importlib import resources

import pytest

from ia3 import autfn, bracketmap, lie, relations
from ia3.magnus import gamma_degree
from ia3.words import left_normed, magnus_alphabet

ALPHA = magnus_alphabet(3)


def test_matrix_shape_and_labels():
    bm = bracketmap.build_bracket_matrix()
    assert len(bm.entries) == 240
    assert all(len(row) == 162 for row in bm.entries)
    assert len(bm.col_labels) == 18 * 9 == 162
    assert bm.row_trees == lie.hall_basis(ALPHA, 3)


def test_named_column_matches_direct_bracketing():
    # the class of R1-1 bracketed with K12 is the left-normed [K32, K12, K12]
    bm = bracketmap.build_bracket_matrix()
    col = bm.column("R1-1", "K12")
    word = left_normed([ALPHA.gen("K32"), ALPHA.gen("K12"), ALPHA.gen("K12")])
    expected = lie.word_class(word, 3).coordinates(bm.row_trees)
    assert list(col) == [int(c) for c in expected]


def test_columns_rederive_from_classes():
    bm = bracketmap.build_bracket_matrix()
    rng = random.Random(61)
    for rid, gen in rng.sample(list(bm.col_labels), 12):
        cls = relations.degree2_class(rid)
        gvec = lie.LieVector(ALPHA, 1, {ALPHA.index(gen): Fraction(1)})
        expected = lie.bracket(cls, gvec).coordinates(bm.row_trees)
        assert list(bm.column(rid, gen)) == [int(c) for c in expected]


def test_rank_and_submatrices():
    assert bracketmap.matrix_rank() == 162
    assert bracketmap.generator_submatrix_rank("K12") == 18
    assert bracketmap.drop_relator_rank("R1-1") == 153
    with pytest.raises(KeyError):
        bracketmap.drop_relator_rank("R9-9")


def test_injectivity_report():
    report = bracketmap.verify_injectivity()
    assert report["ok"]
    assert report["rank"] == 162
    assert set(report["dropped_relator_ranks"].values()) == {153}


def test_cokernel_is_free_of_rank_78():
    report = bracketmap.cokernel()
    assert report["ok"]
    assert report["cokernel_rank"] == 78
    assert report["free"] and report["recomposition"]
    assert set(report["invariant_factors"]) == {1}


def test_table_marks():
    data = bracketmap.load_table1()
    t_marked = lie.tree_from_str("[K13,K12,K12]", ALPHA)
    t_unmarked = lie.tree_from_str("[K21,K12,K12]", ALPHA)
    assert data.mark_of(t_marked) == "(4)"
    assert data.mark_of(t_unmarked) == ""
    assert len(data.marked_trees()) == 162
    assert len(data.unmarked_trees()) == 78


def test_table_verification_certificates():
    report = bracketmap.table1_verify()
    assert report["ok"]
    assert report["certified_marked"] == 162
    assert report["failures"] == []


def test_table_rows_can_come_in_any_order(tmp_path):
    text = resources.files("ia3.data").joinpath("table1.csv").read_text()
    lines = text.strip().splitlines()
    header, rows = lines[0], lines[1:]
    rng = random.Random(62)
    rng.shuffle(rows)
    shuffled = tmp_path / "table1.csv"
    shuffled.write_text("\n".join([header] + rows) + "\n")
    report = bracketmap.table1_verify(bracketmap.load_table1(str(shuffled)))
    assert report == bracketmap.table1_verify()


def test_table_rejects_a_non_basis_tree(tmp_path):
    text = resources.files("ia3.data").joinpath("table1.csv").read_text()
    lines = text.strip().splitlines()
    lines[1] = "K12,K13,K13,(4)"  # [K12,K13] has its larger letter on the right
    bad = tmp_path / "table1.csv"
    bad.write_text("\n".join(lines) + "\n")
    with pytest.raises(ValueError):
        bracketmap.load_table1(str(bad))


def test_deep_relator_word():
    w = bracketmap.deep_relator_word()
    assert autfn.eval_word(w).is_identity()
    assert gamma_degree(w) == 3
    target = left_normed([ALPHA.gen("K312"), ALPHA.gen("K31"), ALPHA.gen("K312")])
    assert lie.word_class(w, 3) == -1 * lie.word_class(target, 3)


def test_deep_relator_suite():
    suite = bracketmap.deep_relator_suite()
    assert suite["ok"], suite
    assert suite["highest_weight_deep"] == (3, 2, -2)
    assert suite["weyl_dimension"] == 35
    assert suite["independent_pair_rank"] == 2
    assert suite["image_membership"]


def test_dimension_arithmetic():
    report = bracketmap.dimension_arithmetic()
    assert report["ok"]
    assert report["lie_rank"] == 240
    assert report["image_rank"] == 162
    assert report["cokernel_rank"] == 78
    assert report["quotient_bound"] == 197
    assert all(report["identities"].values())
