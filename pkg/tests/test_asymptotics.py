import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp

from parzero import asymptotics as asy
from parzero.families import partition_counts
from parzero.hpnum import DomainError, eval_P

# near gamma_12 (f_1 = f_2) inside the disk: both leading terms matter
NEAR_C12 = complex(-0.462, 0.382)


def test_hr_values():
    approx = asy.hr_approx(100)
    assert abs(approx / mpmath.mpf("1.9928e8") - 1) < 1e-3
    # the leading formula overshoots: p_100 / approx is just below 1
    assert abs(asy.hr_ratio(100) - 0.95628481) < 1e-7
    assert abs(1 - asy.hr_ratio(1000)) < abs(1 - asy.hr_ratio(100))
    assert asy.hr_ratio(1) > 0


def test_hr_inverse_ratio_bands():
    # approx / p_n sits in (1, 1.05) at n=100 and (1, 1.02) at n=1000
    inv100, inv1000 = 1 / asy.hr_ratio(100), 1 / asy.hr_ratio(1000)
    assert 1 < inv100 < 1.05 and 1 < inv1000 < 1.02


def test_hr_report_consistent():
    r = asy.hr_report(100)
    assert r.exact == partition_counts(100)[100]
    assert abs(r.rel_error - abs(1 - 1 / asy.hr_ratio(100))) < 1e-12


@given(st.integers(1, 10**6))
def test_saddle_constants_consistent(n):
    c = asy.SaddleConstants.for_n(n)
    with mp.workprec(128):
        assert abs(2 * c.sigma - c.a * c.lambda_n) < mpmath.mpf(2) ** -100 * c.sigma
        assert abs(mpmath.pi / (12 * c.alpha) - c.sigma) < mpmath.mpf(2) ** -100 * c.sigma
        assert abs(c.m * c.alpha - c.sigma) < mpmath.mpf(2) ** -100 * c.sigma


@pytest.mark.parametrize("x", [1.5, 2, complex(-1.5, 0.5)])
def test_sn_error_decreases(x):
    errs = [asy.sn_report(n, x).rel_error for n in (100, 200, 400)]
    assert errs[0] > errs[1] > errs[2]


def test_sn_log_gap_shrinks():
    gaps = []
    for n in (50, 100, 200, 400):
        r = asy.sn_report(n, 2)
        with mp.workprec(128):
            gaps.append(abs(mpmath.log(abs(r.approx)) - mpmath.log(abs(r.exact))))
    assert all(a > b for a, b in zip(gaps, gaps[1:]))


def test_sn_real_positive_for_real_x():
    v = asy.sn_approx(100, 2)
    assert v.imag == 0 and v.real > 0
    assert 0 < asy.sn_report(100, 2).rel_error < 1


def test_outer_domain():
    with pytest.raises(DomainError):
        asy.sn_approx(10, 1.01)
    with pytest.raises(DomainError):
        asy.fn_outer_approx(10, 0.9)


def test_outer_limit_at_two():
    gaps = [asy.fn_outer_gap(n, 2) for n in (100, 200, 400)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-6
    with mp.workprec(128):
        assert abs(eval_P(0.5, tol=1e-40, prec=160).value - mpmath.mpf("3.46274661945506361153795734292443116454075790")) < 1e-35


def test_outer_large_x_leading_behaviour():
    # F_n is monic and P(1/x) -> 1: F_n(x) / x^n -> 1 for huge x
    r = asy.fn_outer_report(30, 1e6)
    assert r.rel_error < 1e-5


def test_outer_relative_error_decreases():
    errs = [asy.fn_outer_report(n, 1.25).rel_error for n in (100, 200, 400)]
    assert errs[0] > errs[1] > errs[2]


def test_w_hk_examples():
    with mp.workprec(128):
        x = mpmath.mpf(3) / 10
        assert abs(asy.w_hk(x, 0, 1) - mpmath.log(1 - x) / 2) < mpmath.mpf(2) ** -120
        # k=2, h=1: the odd-l terms sum to -atanh(x)/2
        want = mpmath.log(1 - x**2) / 4 - mpmath.atanh(x) / 2
        assert abs(asy.w_hk(x, 1, 2, tol=1e-36) - want) < 1e-36
    for h, k in asy.INNER_TERMS:
        assert asy.w_hk(0, h, k) == 0


def test_w_hk_precision_doubling():
    lo = asy.w_hk(0.3, 1, 2, tol=1e-30, prec=128)
    hi = asy.w_hk(0.3, 1, 2, tol=1e-60, prec=256)
    with mp.workprec(256):
        assert abs(lo - hi) < 1e-30


@given(st.floats(0, 0.9), st.floats(0, 3.14))
def test_w_hk_matches_direct_sum(r, t):
    with mp.workprec(140):
        x = mpmath.mpf(r) * mpmath.expj(t)
        for h, k in ((1, 3), (2, 3)):
            w = mpmath.exp(2j * mpmath.pi * h / k)
            # 0.9^1200 is far below the tolerance
            direct = mpmath.log(1 - x**k) / (2 * k) + mpmath.fsum(
                x**l / l / (w ** (-l) - 1) for l in range(1, 1200) if l % k)
            assert abs(asy.w_hk(x, h, k, tol=1e-35, prec=128) - direct) < 1e-25


def test_w_hk_contract():
    with pytest.raises(ValueError):
        asy.w_hk(0.2, 2, 4)
    with pytest.raises(DomainError):
        asy.w_hk(1, 1, 2)


def test_I_k_values():
    assert asy.I_k(100, 0, 1) == 0
    lo = asy.I_k(100, 0.5, 1, prec=128)
    hi = asy.I_k(100, 0.5, 1, prec=256)
    with mp.workprec(128):
        assert abs(lo - hi) / abs(hi) < mpmath.mpf(2) ** -110
    for x in (0.1, 0.35, 0.6, 0.85):
        a, b, c = (abs(asy.I_k(200, x, k)) for k in (1, 2, 3))
        assert a >= b >= c


def test_I_k_normalization_gives_unit_ratio_on_positive_axis():
    # deep in the f_1 region the first term alone carries F_n
    errs = [asy.fn_inner_report(n, 0.3, terms=1).rel_error for n in (100, 400, 1600)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 0.01


def test_inner_error_decreases():
    errs = [asy.fn_inner_report(n, complex(0.4, 0.3)).rel_error for n in (200, 500, 1000)]
    assert errs[0] > errs[1] > errs[2]


def test_inner_single_term_deep_in_first_region():
    x = complex(0.5, 0.05)
    one = asy.fn_inner_report(200, x, terms=1).rel_error
    four = asy.fn_inner_report(200, x).rel_error
    assert one < 0.05
    # the extra terms are exponentially smaller here, so both agree closely
    assert abs(one - four) < 1e-3


@pytest.mark.parametrize("n", [200, 201, 400, 401])
def test_inner_extra_terms_needed_near_first_boundary(n):
    one = asy.fn_inner_report(n, NEAR_C12, terms=1).rel_error
    four = asy.fn_inner_report(n, NEAR_C12).rel_error
    assert four < one / 5


def test_inner_second_term_sign_alternates():
    even = asy.inner_terms(200, NEAR_C12)[1]
    odd_phase = asy.inner_terms(201, NEAR_C12)[1] / asy.I_k(201, NEAR_C12, 2)
    even_phase = even / asy.I_k(200, NEAR_C12, 2)
    with mp.workprec(128):
        assert abs(odd_phase + even_phase) < 1e-25 * abs(even_phase)


def test_inner_domain():
    with pytest.raises(DomainError):
        asy.fn_inner_approx(100, 0.97)
    with pytest.raises(DomainError):
        asy.fn_inner_approx(100, complex(0.3, -0.2))
