from concurrent.futures import ThreadPoolExecutor

import pytest

from helpers import binom, pascal_rows
from qlattice.errors import DomainError, NegativeIndex
from qlattice.poly import ONE, Polynomial, ZERO
from qlattice.qbinom import (
    QBinomTable,
    check_absorption,
    check_symmetry,
    gauss,
    gauss_product,
    gauss_qfactorial,
    gauss_recur1,
    gauss_recur2,
    q_factorial,
    q_integer,
)

# frozen expansions, cross-checked by every compute route below
GAUSS_4_2 = Polynomial((1, 1, 2, 1, 1))
GAUSS_6_3 = Polynomial((1, 1, 2, 3, 3, 3, 3, 2, 1, 1))
GAUSS_9_4 = Polynomial((1, 1, 2, 3, 5, 6, 8, 9, 11, 11, 12, 11, 11, 9, 8, 6, 5, 3, 2, 1, 1))

ROUTES = (gauss_product, gauss_qfactorial, gauss_recur1, gauss_recur2, gauss)


def test_q_integer():
    assert q_integer(0) == ZERO
    assert q_integer(1) == ONE
    assert q_integer(3) == Polynomial((1, 1, 1))
    with pytest.raises(NegativeIndex):
        q_integer(-1)


def test_q_factorial():
    assert q_factorial(0) == ONE
    assert q_factorial(2) == Polynomial((1, 1))
    assert q_factorial(3) == Polynomial((1, 2, 2, 1))  # (1+q)(1+q+q^2)
    with pytest.raises(NegativeIndex):
        q_factorial(-2)


@pytest.mark.parametrize("route", ROUTES)
def test_golden_values_every_route(route):
    assert route(4, 2) == GAUSS_4_2
    assert route(6, 3) == GAUSS_6_3
    assert route(9, 4) == GAUSS_9_4


@pytest.mark.parametrize("route", ROUTES)
def test_edge_conventions_every_route(route):
    assert route(5, 0) == ONE
    assert route(5, 5) == ONE
    assert route(0, 0) == ONE
    assert route(3, 5) == ZERO
    assert route(3, -1) == ZERO
    with pytest.raises(NegativeIndex):
        route(-1, 0)


def test_four_route_agreement():
    for n in range(13):
        for k in range(n + 1):
            a = gauss_product(n, k)
            assert a == gauss_qfactorial(n, k) == gauss_recur1(n, k) == gauss_recur2(n, k)


def test_recur1_small_base():
    assert gauss_recur1(2, 1) == Polynomial((1, 1))
    assert gauss_recur2(2, 1) == Polynomial((1, 1))


def test_q_equals_one_matches_independent_pascal():
    rows = pascal_rows(20)
    for n in range(21):
        for k in range(n + 1):
            assert gauss(n, k).eval_int(1) == binom(rows, n, k)


def test_degree_positivity_palindrome():
    for n in range(13):
        for k in range(n + 1):
            g = gauss(n, k)
            assert g.degree == k * (n - k)
            assert all(c > 0 for c in g.coeffs)
            assert g.coeffs == g.coeffs[::-1]


def test_check_symmetry():
    assert check_symmetry(4, 2)
    assert check_symmetry(6, 2)
    assert check_symmetry(9, 4)
    for n in range(11):
        for k in range(n + 1):
            assert check_symmetry(n, k)


def test_check_absorption():
    assert check_absorption(2, 1)  # (1+q)(1-q) = (1-q^2)
    assert check_absorption(4, 2)
    assert check_absorption(9, 4)
    for n in range(2, 11):
        for k in range(1, n):
            assert check_absorption(n, k)


def test_check_absorption_domain():
    with pytest.raises(DomainError):
        check_absorption(4, 0)
    with pytest.raises(DomainError):
        check_absorption(4, 4)


def test_table_memo_idempotent_and_write_once():
    t = QBinomTable()
    a = t.gauss(6, 3)
    filled = len(t)
    b = t.gauss(6, 3)
    assert a is b  # same cached object, no recompute
    assert len(t) == filled
    assert (6, 3) in t and (6, 7) not in t
    assert t.gauss(6, 7) == ZERO
    assert len(t) == filled  # out-of-range values are not stored


def test_table_agrees_with_product_route():
    t = QBinomTable()
    assert t.gauss(10, 3) == gauss_product(10, 3)
    for key in ((7, 2), (9, 9), (8, 0)):
        assert t.gauss(*key) == gauss_product(*key)


def test_table_concurrent_fill():
    t = QBinomTable()
    jobs = [(12, 6), (12, 5), (11, 4), (12, 6), (10, 3)] * 8
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda nk: t.gauss(*nk), jobs))
    for (n, k), got in zip(jobs, results):
        assert got == gauss_product(n, k)


def test_default_table_shared_and_overridable():
    mine = QBinomTable()
    assert gauss(7, 3, table=mine) == gauss(7, 3)
    assert (7, 3) in mine
