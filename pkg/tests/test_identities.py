from math import comb

import pytest

from qlattice.errors import DomainError
from qlattice.identities import (
    DEFAULT_MAX_R,
    IdentityId,
    REQUIRED_IDENTITIES,
    sweep,
    thm1_terms,
    thm2_terms,
    thm3_terms,
    thm4_terms,
    verify_cor1,
    verify_cor2_corrected,
    verify_cor2_printed,
    verify_guoyang1,
    verify_guoyang2,
    verify_sun1,
    verify_sun2,
    verify_thm1,
    verify_thm2,
    verify_thm3,
    verify_thm4,
)
from qlattice.poly import Polynomial
from qlattice.qbinom import gauss

from helpers import binom, pascal_rows

PASCAL = pascal_rows(60)


# hand expansions -------------------------------------------------------------


def test_thm1_hand_expansion_4_2():
    terms = thm1_terms(4, 2)
    assert terms == [
        Polynomial((1,)),          # q^0 [1;0]
        Polynomial((0, 1, 1)),     # q^1 [2;1]
        Polynomial((0, 0, 1, 1, 1)),  # q^2 [3;2]
    ]
    assert sum(terms, Polynomial(())) == gauss(4, 2)


def test_thm2_hand_expansion_4_2():
    terms = thm2_terms(4, 2)
    assert terms == [
        Polynomial((0, 0, 0, 0, 1)),  # q^4 [1;1]
        Polynomial((0, 0, 1, 1)),     # q^2 [2;1]
        Polynomial((1, 1, 1)),        # q^0 [3;1]
    ]
    assert sum(terms, Polynomial(())) == gauss(4, 2)


def test_thm3_hand_expansion_4_1():
    terms = thm3_terms(4, 1)
    assert terms == [Polynomial((0, 0, 1, 1)), Polynomial((1, 1))]
    assert sum(terms, Polynomial(())) == gauss(4, 3)


def test_thm4_hand_expansions():
    assert thm4_terms(1, 1) == [Polynomial((1,)), Polynomial((0, 1))]
    # n=3, r=1: [2;1] + q^2 [2;1] restricted by the split at the middle square
    assert thm4_terms(3, 1) == [Polynomial((1, 1)), Polynomial((0, 0, 1, 1))]
    assert sum(thm4_terms(3, 1), Polynomial(())) == gauss(4, 1)
    assert sum(thm4_terms(5, 4), Polynomial(())) == gauss(9, 4)


def test_guoyang1_hand_expansion_1_2():
    t0 = (gauss(1, 0).substitute_power(2) * gauss(2, 2)).shift(comb(2, 2))
    t1 = (gauss(2, 1).substitute_power(2) * gauss(2, 0)).shift(comb(0, 2))
    assert t0 == Polynomial((0, 1))
    assert t1 == Polynomial((1, 0, 1))
    assert t0 + t1 == gauss(3, 2)
    assert verify_guoyang1(1, 2)


def test_cor1_hand_values():
    assert verify_cor1(2, 1)
    assert verify_cor1(4, 1)
    # independent recomputation of the n=4, r=1 case
    lhs = 2 * (comb(1, 1) * comb(4, 1) + comb(2, 1) * comb(3, 1))
    assert lhs == 20 == comb(6, 3)


def test_cor2_printed_fails_corrected_holds():
    assert not verify_cor2_printed(1, 1)  # 4 != 2
    assert not verify_cor2_printed(3, 1)  # 8 != 4
    assert verify_cor2_corrected(1, 1)
    assert verify_cor2_corrected(3, 1)
    assert verify_cor2_corrected(3, 3)


# modest sweeps over each verifier --------------------------------------------


def test_thm1_thm2_modest():
    for n in range(1, 11):
        for k in range(1, n + 1):
            if k < n:
                assert verify_thm1(n, k), (n, k)
            assert verify_thm2(n, k), (n, k)


def test_thm3_thm4_modest():
    for n in range(3, 11):
        for r in range(1, (n - 1) // 2 + 1):
            assert verify_thm3(n, r), (n, r)
    for n in range(1, 10, 2):
        for r in range(1, 6):
            assert verify_thm4(n, r), (n, r)


def test_guoyang_sun_modest():
    for m in range(0, 8):
        for n in range(0, 8):
            assert verify_guoyang1(m, n), (m, n)
            assert verify_guoyang2(m, n), (m, n)
            assert verify_sun1(m, n), (m, n)
            assert verify_sun2(m, n), (m, n)


def test_r_zero_extensions():
    # r = 0 degenerates both product factors to 1; still exact
    assert verify_thm3(5, 0)
    assert thm3_terms(5, 0) == [
        Polynomial((0,) * (5 - i) + (1,)) for i in range(1, 6)
    ]
    assert sum(thm3_terms(5, 0), Polynomial(())) == gauss(5, 1)
    assert verify_thm4(7, 0)
    assert thm4_terms(7, 0) == [Polynomial((1,))]


# cross-identity structure -----------------------------------------------------


def test_cor1_is_thm3_at_q_one():
    # cor1(n, r) pairs the i <-> n+1-i terms of thm3(n+2r, r) at q = 1
    for n in range(2, 11, 2):
        for r in range(1, 5):
            full = sum(t.eval_int(1) for t in thm3_terms(n + 2 * r, r))
            paired = 2 * sum(
                comb(r - 1 + i, r) * comb(n + r - i, r)
                for i in range(1, n // 2 + 1)
            )
            assert full == paired == comb(n + 2 * r, 2 * r + 1), (n, r)
            assert verify_cor1(n, r)


def test_sun_is_guoyang_shadow():
    from qlattice.identities import (
        _guoyang1_sides,
        _guoyang2_sides,
        _sun1_sides,
        _sun2_sides,
    )

    for m in range(0, 7):
        for n in range(0, 7):
            gl, gr = _guoyang1_sides(m, n)
            sl, sr = _sun1_sides(m, n)
            assert gl.eval_int(1) == sl and gr.eval_int(1) == sr, (m, n)
            gl, gr = _guoyang2_sides(m, n)
            sl, sr = _sun2_sides(m, n)
            assert gl.eval_int(1) == sl and gr.eval_int(1) == sr, (m, n)


def test_sun1_against_independent_pascal():
    for m in range(0, 12):
        for n in range(0, 12):
            lhs = sum(
                binom(PASCAL, m + k, k) * binom(PASCAL, m + 1, n - 2 * k)
                for k in range(n // 2 + 1)
            )
            assert lhs == binom(PASCAL, m + n, n), (m, n)


# domain errors ----------------------------------------------------------------


@pytest.mark.parametrize(
    "fn,args",
    [
        (thm1_terms, (3, 0)),
        (thm1_terms, (3, 3)),
        (thm2_terms, (3, 0)),
        (thm3_terms, (4, 2)),
        (thm3_terms, (3, -1)),
        (thm4_terms, (2, 1)),
        (thm4_terms, (3, -1)),
        (verify_cor1, (3, 1)),
        (verify_cor1, (2, 0)),
        (verify_cor2_printed, (2, 1)),
        (verify_cor2_printed, (1, 2)),
        (verify_cor2_corrected, (1, 0)),
        (verify_guoyang1, (-1, 0)),
        (verify_guoyang2, (0, -1)),
        (verify_sun1, (-2, 3)),
        (verify_sun2, (3, -2)),
    ],
)
def test_precondition_violations(fn, args):
    with pytest.raises(DomainError):
        fn(*args)


def test_sweep_bound_validation():
    with pytest.raises(DomainError):
        sweep(IdentityId.THM1, -1)
    with pytest.raises(DomainError):
        sweep(IdentityId.THM1, 5, max_r=-2)
    with pytest.raises(ValueError):
        sweep("not-an-identity", 5)


# sweep reports ----------------------------------------------------------------


def test_sweep_passes_and_counts():
    rep = sweep(IdentityId.THM1, 8)
    assert rep.passed and not rep.failures
    assert rep.checked == sum(n - 1 for n in range(2, 9))
    assert rep.identity is IdentityId.THM1
    rep = sweep(IdentityId.THM2, 6)
    assert rep.passed and rep.checked == sum(range(1, 7))


def test_sweep_accepts_string_and_is_deterministic():
    a = sweep("thm4", 9, max_r=4)
    b = sweep(IdentityId.THM4, 9, max_r=4)
    assert a == b
    assert a.passed and a.checked == 5 * 4


def test_cor2_printed_sweep_records_counterexamples():
    rep = sweep(IdentityId.COR2_PRINTED, 7)
    assert not rep.passed
    assert rep.checked == 16  # odd n, odd r in 1..7
    first = rep.failures[0]
    assert first.params == (("n", 1), ("r", 1))
    assert first.lhs == "4" and first.rhs == "2"
    # corrected variant is clean over the identical grid
    assert sweep(IdentityId.COR2_CORRECTED, 7).passed


def test_report_json_shape():
    js = sweep(IdentityId.COR2_PRINTED, 3).to_json()
    assert js["id"] == "cor2-printed"
    assert js["passed"] is False
    assert js["checked"] == 4
    assert js["failures"][0] == {"params": {"n": 1, "r": 1}, "lhs": "4", "rhs": "2"}
    js = sweep(IdentityId.SUN1, 4).to_json()
    assert js["passed"] is True and js["failures"] == []
    assert js["checked"] == 25 and "m" in js["domain"]


def test_required_identity_set():
    assert IdentityId.COR2_PRINTED not in REQUIRED_IDENTITIES
    assert len(REQUIRED_IDENTITIES) == 10
    assert DEFAULT_MAX_R == 8
