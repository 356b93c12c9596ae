"""Exact linear algebra: rank, span, inversion, Smith form."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ia3 import linalg


def rank_oracle(mat):
    """Plain fraction Gaussian elimination, no pivoting tricks."""
    rows = [[Fraction(x) for x in row] for row in mat]
    rank, col = 0, 0
    width = len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / lead
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def random_matrix(rng, m, n, lo=-9, hi=9):
    return [[rng.randrange(lo, hi + 1) for _ in range(n)] for _ in range(m)]


def test_rank_unit_cases():
    assert linalg.rank_exact(linalg.identity(5)) == 5
    assert linalg.rank_exact([[0, 0], [0, 0], [0, 0]]) == 0
    assert linalg.rank_exact([[1, 2], [2, 4]]) == 1
    assert linalg.rank_exact([]) == 0


def test_rank_matches_oracle():
    rng = random.Random(2203)
    for _ in range(60):
        mat = random_matrix(rng, rng.randrange(1, 6), rng.randrange(1, 6))
        assert linalg.rank_exact(mat) == rank_oracle(mat)
        assert linalg.rank_mod_p(mat) == rank_oracle(mat)


def test_in_span_solves_column_combination():
    cols = [[1, 0, 2], [0, 1, 3]]
    mat = linalg.transpose(cols)
    coeffs = linalg.in_span([2, 3, 13], mat)
    assert coeffs == [Fraction(2), Fraction(3)]
    assert linalg.in_span([0, 0, 1], mat) is None


def test_invert_round_trip():
    rng = random.Random(2204)
    done = 0
    while done < 25:
        mat = random_matrix(rng, 3, 3, -5, 5)
        try:
            inv = linalg.invert(mat)
        except ValueError:
            continue
        assert linalg.matmul(mat, inv) == linalg.identity(3)
        assert linalg.matmul(inv, mat) == linalg.identity(3)
        done += 1


def test_invert_rejects_singular_and_ragged():
    with pytest.raises(ValueError):
        linalg.invert([[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        linalg.invert([[1, 2, 3], [4, 5, 6]])


def snf_diag(form, shape):
    rows, cols = shape
    out = [[0] * cols for _ in range(rows)]
    for i, f in enumerate(form.factors):
        out[i][i] = f
    return out


def assert_snf_contract(mat):
    form = linalg.snf(mat)
    shape = (len(mat), len(mat[0]) if mat else 0)
    assert form.shape == shape
    product = linalg.matmul(linalg.matmul(form.U, mat), form.V)
    assert [[int(x) for x in row] for row in product] == snf_diag(form, shape)
    nonzero = [f for f in form.factors if f]
    assert form.rank == len(nonzero) == linalg.rank_exact(mat)
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    # U and V are unimodular: their inverses exist and are integral
    for square in (form.U, form.V):
        inv = linalg.invert(square)
        assert all(x.denominator == 1 for row in inv for x in row)


def test_snf_unit_cases():
    assert linalg.snf([[0, 1], [1, 0]]).factors[:2] == [1, 1]
    form = linalg.snf([[2, 0], [0, 4]])
    assert [f for f in form.factors if f] == [2, 4]
    assert linalg.snf([[0, 0], [0, 0]]).rank == 0
    assert_snf_contract([[4, 6], [6, 9]])


def test_snf_random_contract():
    rng = random.Random(2205)
    for _ in range(40):
        mat = random_matrix(rng, rng.randrange(1, 5), rng.randrange(1, 5), -6, 6)
        assert_snf_contract(mat)


matrix_st = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n),
        min_size=1, max_size=4,
    )
)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(matrix_st)
def test_snf_contract_property(mat):
    assert_snf_contract(mat)
