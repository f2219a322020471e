from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cfsym.cf import CFWord, convergents, evaluate
from cfsym.errors import NotPalindromicError, PreconditionError, SingularError
from cfsym.exact import Polynomial, RationalFunction, X
from cfsym.folding import (
    FoldSpec,
    corfrac_value,
    duplicate_build,
    fold_once,
    help_build,
    is_palindromic,
    k_fold_build,
    k_fold_value,
    parsums_sides,
    parsums_x3,
)

x = X
ints = st.integers(-6, 6)
nz = ints.filter(bool)


def test_fold_once_examples():
    w = fold_once(0, [2], 3)
    assert w == [0, 2, 3, -2]
    assert evaluate(w) == Fraction(1, 2) - Fraction(1, 12) == Fraction(5, 12)
    # over Q(x): p/q = 1/x, n = 1, value 1/x - 1/(x^2 x^2)
    w = fold_once(Polynomial(0), [x], x * x)
    assert evaluate(w) == RationalFunction(x ** 3 - 1, x ** 4)


def test_k_fold_build_examples():
    assert k_fold_build(FoldSpec(0, [2], [1, 1])) == [0, 2, 1, -2, 1, 2]
    assert k_fold_build(FoldSpec(0, [2], [3])) == [0, 2, 3, -2]
    w = k_fold_build(FoldSpec(0, [1, 2], [5, 7, 9]))
    assert len(w) == 12
    assert w == [0, 1, 2, 5, -2, -1, 7, 1, 2, 9, -2, -1]
    with pytest.raises(ValueError):
        FoldSpec(0, [1], [])


def test_k_fold_values():
    spec = FoldSpec(0, [2], [1, 1])
    assert k_fold_value(spec) == corfrac_value(spec) == Fraction(1, 6)
    assert evaluate(k_fold_build(spec)) == Fraction(1, 6)
    assert k_fold_value(FoldSpec(0, [2], [3])) == Fraction(5, 12)


def test_parsums_examples():
    assert parsums_x3(1, -1, 2, 0, 1) == -1
    assert parsums_x3(1, -1, 2, 0, 2) == -5
    left, right = parsums_sides(Fraction(1, 2), 2, 0, 1, -1, 2)
    assert left == right
    with pytest.raises(PreconditionError):
        parsums_x3(0, 1, 2, 0, 1)
    with pytest.raises(ValueError):
        parsums_x3(1, 1, 2, 0, 0)


def test_parsums_symbolic_application():
    # q a power of x, x1 = +-1, x2 = -1: the third separator is a polynomial
    q = x ** 4
    for n in (0, 1):
        for x1 in (1, -1):
            x3 = parsums_x3(x1, -1, q, n, 3)
            assert isinstance(x3, Polynomial) and x3.is_integral()


def test_help_examples():
    word, value = help_build(0, [2], 1)
    assert word == [0, 2, 1, 2, 1, -2]
    assert value == Fraction(5, 14) == evaluate(word)
    word, value = help_build(0, [2], 0)
    assert value == Fraction(1, 6) == evaluate(word)


def test_duplicate_examples():
    word, value = duplicate_build(CFWord([1, 1]), 1)
    assert word == [1, 1, 1, 1, 1]
    assert value == Fraction(8, 5) == evaluate(word)
    one = Polynomial(1)
    word, value = duplicate_build(CFWord([one, x - 1, one]), Polynomial(0))
    assert word == [one, x - 1, Polynomial(2), x - 1, one]
    P1 = RationalFunction(2 * x * (x + 1), 2 * x * x - 1)
    assert value == P1 == evaluate(word)
    with pytest.raises(NotPalindromicError, match="not palindromic"):
        duplicate_build(CFWord([1, 2]), 1)


@settings(max_examples=300)
@given(ints, st.lists(nz, min_size=1, max_size=6), nz)
def test_folding_lemma(a0, w, xv):
    word = [a0, *w]
    p, q = convergents(CFWord(word))
    try:
        built = fold_once(a0, w, xv)
    except SingularError:
        assume(False)
    n = len(w)
    assert evaluate(built) == Fraction(p[-1], q[-1]) + Fraction((-1) ** n, xv * q[-1] ** 2)


@settings(max_examples=300)
@given(ints, st.lists(nz, min_size=1, max_size=4), st.lists(nz, min_size=1, max_size=4))
def test_generalized_folding_lemma(a0, w, xs):
    spec = FoldSpec(a0, w, xs)
    try:
        direct = evaluate(k_fold_build(spec))
        closed = k_fold_value(spec)
        ecf = corfrac_value(spec)
    except SingularError:
        assume(False)
    assert direct == closed == ecf


@settings(max_examples=200)
@given(ints, st.lists(nz, max_size=5), ints)
def test_help_closed_form(a0, w, X_):
    try:
        word, value = help_build(a0, w, X_)
        direct = evaluate(word)
    except SingularError:
        assume(False)
    assert value == direct


palindromes = st.lists(st.integers(1, 6), min_size=1, max_size=4).map(lambda h: h + h[-2::-1])


@settings(max_examples=200)
@given(palindromes, ints)
def test_duplicate_closed_form(word, xv):
    assert is_palindromic(word)
    try:
        built, value = duplicate_build(CFWord(word), xv)
        direct = evaluate(built)
    except SingularError:
        assume(False)
    assert value == direct
    assert is_palindromic(built.quotients)


@settings(max_examples=200)
@given(st.integers(1, 5), st.integers(-4, 4).filter(bool), st.integers(1, 5), st.sampled_from([0, 1]),
       st.sampled_from([1, -1]))
def test_parsums_identity(j, x2, q, n, x1):
    p = 1
    try:
        left, right = parsums_sides(p, q, n, x1, x2, j)
    except SingularError:
        assume(False)
    assert left == right
