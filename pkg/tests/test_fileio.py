from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from copocert import SymmetricIntMatrix, random_instance
from copocert.errors import ParseError
from copocert.fileio import parse_matrix, parse_vector, render_report, serialize_matrix, serialize_vector


@st.composite
def matrices(draw):
    n = draw(st.integers(1, 6))
    upper = draw(st.lists(st.integers(-10 ** 30, 10 ** 30), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2))
    return SymmetricIntMatrix(n, tuple(upper))


@given(matrices())
def test_matrix_round_trip(M):
    assert parse_matrix(serialize_matrix(M, "note")) == M


def test_triangular_form_and_comments():
    text = "# a comment\n3\n1 2 3\n\n4 5   # trailing\n6\n"
    assert parse_matrix(text).rows() == [[1, 2, 3], [2, 4, 5], [3, 5, 6]]


@pytest.mark.parametrize("text", [
    "", "2\n1 2\n3 4\n", "2\n1 2 3 4 5\n", "0\n", "2\n1 x\n2 1\n",
])
def test_bad_matrices(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_vector_round_trip():
    y = (Fraction(1, 3), Fraction(0), Fraction(2 ** 80))
    assert parse_vector(serialize_vector(y)) == y
    assert serialize_vector([Fraction(2)]) == "2/1\n"
    with pytest.raises(ParseError):
        parse_vector("1/0\n")
    with pytest.raises(ParseError):
        parse_vector("abc\n")


def test_render_report():
    rep = {"verdict": "copositive", "gamma": "0/1", "argmin": ["0/1", "1/2"]}
    assert render_report(rep) == "verdict: copositive\ngamma: 0/1\nargmin: 0/1 1/2\n"
    assert '"gamma": "0/1"' in render_report(rep, "json")


@pytest.mark.parametrize("kind", ["symmetric", "nonnegative", "psd"])
def test_generated_round_trip(kind):
    for seed in range(10):
        M = random_instance(kind, 1 + seed % 4, 9, seed)
        assert parse_matrix(serialize_matrix(M)) == M
