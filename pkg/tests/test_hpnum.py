import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp

from parzero.exactpoly import ExactPolynomial
from parzero.families import parts_poly, taylor_poly
from parzero.hpnum import (
    DomainError,
    PrecisionError,
    dilog,
    eval_P,
    eval_poly,
    hp,
    modular_check,
    poly_eval_precision,
    truncated_P,
)


def _qp_inverse(x, prec):
    with mp.workprec(prec):
        return 1 / mpmath.qp(x)


def test_eval_P_examples():
    assert eval_P(0).value == 1
    r = eval_P(0.5, tol=1e-40, prec=160)
    assert abs(r.value - _qp_inverse(mpmath.mpf(0.5), 200)) < 1e-40
    assert abs(complex(r.value) - 3.4627466194550636) < 1e-15
    neg = eval_P(-0.5).value
    assert neg.imag == 0 and 0 < neg.real < 1


def test_eval_P_rejects_outside_disk():
    with pytest.raises(DomainError):
        eval_P(1)
    with pytest.raises(DomainError):
        eval_P(mpmath.mpc(0.8, 0.7))


@given(st.floats(0, 0.95), st.floats(-3.14, 3.14))
def test_eval_P_error_bound_survives_precision_doubling(r, t):
    with mp.workprec(128):
        x = mpmath.mpf(r) * mpmath.expj(t)
    lo = eval_P(x, tol=1e-25, prec=128)
    hi = eval_P(x, tol=1e-50, prec=256)
    with mp.workprec(256):
        assert abs(lo.value - hi.value) <= lo.error_bound + hi.error_bound
    assert lo.terms_used >= 1


def test_truncated_P_approaches_full_product():
    full = eval_P(0.3, tol=1e-35).value
    errs = [abs(truncated_P(0.3, k) - full) for k in (5, 10, 20)]
    assert errs[0] > errs[1] > errs[2]


def test_dilog_special_values():
    with mp.workprec(160):
        assert dilog(0) == 0
        assert abs(dilog(1, 160) - mpmath.pi**2 / 6) < mpmath.mpf(2) ** -150
        assert abs(dilog(-1, 160) + mpmath.pi**2 / 12) < mpmath.mpf(2) ** -150
        half = mpmath.pi**2 / 12 - mpmath.log(2) ** 2 / 2
        assert abs(dilog(0.5, 160) - half) < mpmath.mpf(2) ** -150


@given(st.floats(0, 1), st.floats(-3.1416, 3.1416))
def test_dilog_matches_polylog_in_closed_disk(r, t):
    with mp.workprec(140):
        x = mpmath.mpf(r) * mpmath.expj(t)
        want = mpmath.polylog(2, x)
        got = dilog(x, 128)
        assert abs(got - want) <= mpmath.mpf(2) ** -110 * max(1, abs(want))


def test_dilog_reflection_identity_residuals():
    import random
    rng = random.Random(20240611)
    with mp.workprec(128):
        for _ in range(100):
            x = mpmath.mpf(rng.random())
            lhs = dilog(x, 128) + dilog(1 - x, 128)
            rhs = mpmath.pi**2 / 6 - mpmath.log(x) * mpmath.log(1 - x)
            assert abs(lhs - rhs) < mpmath.mpf(2) ** (-128 + 16)


def test_dilog_domain():
    with pytest.raises(DomainError):
        dilog(1.01)
    # a point rounded onto the circle at double precision is accepted
    dilog(complex(mpmath.expj(2)))


def test_modular_examples():
    assert modular_check(1, prec=256) < 1e-30
    assert modular_check(0.5, prec=256) < 1e-20
    assert modular_check(2, prec=256) < 1e-20
    with mp.workprec(256):
        tau = mpmath.mpc(1, mpmath.mpf(1) / 3)
    assert modular_check(tau, prec=256) < 1e-20


def test_modular_residual_shrinks_with_order():
    res = [modular_check(0.5, q_order=k, prec=256) for k in (1, 2, 4, 8)]
    assert all(a > b for a, b in zip(res, res[1:]))


def test_modular_preconditions():
    with pytest.raises(DomainError):
        modular_check(-1)
    with pytest.raises(DomainError):
        modular_check(1e-9)


def test_eval_poly_examples():
    assert eval_poly(taylor_poly(2), 1) == 4
    assert eval_poly(parts_poly(5), 1) == 7
    p = ExactPolynomial((17, 3, 9))
    assert eval_poly(p, 0) == 17


def test_eval_poly_precision_contract():
    p = parts_poly(400)
    need = poly_eval_precision(p)
    assert need == p.max_abs_coeff().bit_length() + 64
    with pytest.raises(PrecisionError):
        eval_poly(p, 0.5, need - 1)
    with mp.workprec(need + 64):
        d = p.degree
        scaled = sum(c * 3**k * 2 ** (d - k) for k, c in enumerate(p.coeffs))  # 2^d p(3/2)
        exact = mpmath.mpf(scaled) / 2**d
        got = eval_poly(p, mpmath.mpf(3) / 2, need + 64)
        assert abs(got - exact) / abs(exact) < mpmath.mpf(2) ** (-need + 8)


def test_hp_coercions():
    from fractions import Fraction
    with mp.workprec(128):
        assert hp(Fraction(1, 3)) == mpmath.mpf(1) / 3
        assert hp("0.25") == mpmath.mpf(0.25)
    with pytest.raises(PrecisionError):
        hp(1, 32)
