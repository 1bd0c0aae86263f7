from fractions import Fraction
from math import comb

import pytest

from nofil import bounds
from nofil.bounds import (
    AUU_NONNEG,
    COLOUR_G,
    PAU_NONNEG,
    PUU_LOW,
    U_COVERED,
    EmbedParams,
    census_formulas,
    enumerate_exceptions,
    min_admissible_v,
    u_interval,
    v_formula,
)
from nofil.surd import Surd

from tables import INTEGRAL_EXCEPTIONS, REAL_EXCEPTIONS


def test_census_formulas_grundy3_position():
    got = census_formulas(4, 5, 6, 4)
    assert tuple(got.values()) == (6, 4, 12, 0, 6, 3, 4)
    assert all(isinstance(x, Fraction) for x in got.values())


def test_census_formulas_flag_impossible_params():
    got = census_formulas(0, 4, 0, 2)
    assert got["PAA"] == 2 and got["PAU"] == -4


def test_census_formulas_sum_to_block_count():
    for p in range(6):
        for a in range(1, 6):
            for u in range(6):
                for e in range(comb(a, 2) + 1):
                    v = p + a + u
                    got = census_formulas(p, a, u, e)
                    assert sum(got.values()) == Fraction(v * (v - 1), 6)


def test_embed_params():
    assert EmbedParams(4, 5, 6, 4).v == 15
    with pytest.raises(ValueError):
        EmbedParams(1, 3, 1, 4)
    with pytest.raises(ValueError):
        EmbedParams(-1, 3, 1, 1)


def test_p3_plus_k1_in_sts15():
    r = u_interval(4, 2, 15)
    assert Fraction(65, 10) <= r.real_lower <= Fraction(66, 10)
    assert Fraction(67, 10) <= r.real_upper <= Fraction(68, 10)
    assert r.empty and r.u_lo > r.u_hi
    assert not r.real_empty
    assert r.binding() == ([PUU_LOW], [U_COVERED])
    assert r.bound(PUU_LOW).value == Surd(9, -1, 6)
    assert "integral" in r.exception_hits and "real" not in r.exception_hits


def test_known_feasible_cases():
    assert 6 in u_interval(5, 4, 15).feasible_u
    assert 3 in u_interval(1, 0, 7).feasible_u
    assert u_interval(3, 3, 9).feasible_u == [3]


def test_colouring_bounds_only_with_chi():
    r = u_interval(4, 2, 19)
    assert r.bound(COLOUR_G).value is None
    r = u_interval(4, 2, 19, chi=(2, 3))
    assert r.bound(COLOUR_G).value == 13


def test_pau_bound_without_edges():
    for a in range(1, 6):
        for v in range(a, 30):
            assert u_interval(a, 0, v).bound(PAU_NONNEG).value == v - a


def test_graph_too_large_for_order():
    r = u_interval(10, 3, 7)
    assert r.empty and r.real_empty and r.real_upper is None


def test_min_admissible_v_examples():
    m = min_admissible_v(4, 2)
    assert m.v_formula == Surd(8, 1, 17)
    assert m.v_min == 19
    assert [v for v, _ in m.skipped] == [13, 15]
    assert min_admissible_v(1, 0).v_min == 7
    m = min_admissible_v(3, 3)
    assert m.v_formula == 6 and m.v_min == 9
    with pytest.raises(ValueError):
        min_admissible_v(3, 4)


def test_region_bound_is_the_largest_closed_form_bound():
    for a in range(1, 27):
        for e in range(comb(a, 2) + 1):
            _, formula = v_formula(a, e)
            assert formula == max(bounds.closed_form_v_bounds(a, e).values())


def test_real_exceptions_match_table():
    assert list(enumerate_exceptions()) == REAL_EXCEPTIONS
    assert len(REAL_EXCEPTIONS) == 60
    assert not [t for t in enumerate_exceptions() if t[0] == 1]


def test_integral_exceptions_contain_table():
    got = set(enumerate_exceptions(integral=True))
    assert set(INTEGRAL_EXCEPTIONS) <= got
    assert (2, 1, 5) not in got
    # found by the scan but absent from the printed table: u must lie in
    # [ceil(15.127), floor(15.848)] = [16, 15] while the AUU bound allows u = 15
    assert got - set(INTEGRAL_EXCEPTIONS) == {(11, 6, 33)}


def test_exception_scan_matches_surd_evaluation():
    from nofil.bounds import _integral_exception, _real_exception, auu_lower, covered_upper, puu_roots

    for a in range(1, 10):
        for e in range(comb(a, 2) + 1):
            for v in range(a, 4 * a + 8):
                up = covered_upper(a, v)
                low = puu_roots(a, e, v)[0]
                auu = auu_lower(a, e, v)
                assert _real_exception(a, e, v) == (low > up and auu <= up)
                top = up.floor()
                assert _integral_exception(a, e, v) == (
                    max(low.ceil(), 0) > top and max(auu.ceil(), 0) <= top
                )


def test_bound_pairs_leave_room_outside_the_table():
    table = set(REAL_EXCEPTIONS)
    for a in range(1, 16):
        for e in range(comb(a, 2) + 1):
            start = max(v_formula(a, e)[1].ceil(), a)
            for v in range(start, 61):
                if (a, e, v) in table:
                    continue
                r = u_interval(a, e, v)
                assert r.real_upper is not None and r.real_lower <= r.real_upper, (a, e, v)


def test_auu_bound_reported():
    r = u_interval(4, 2, 15)
    assert r.bound(AUU_NONNEG).value == 6
