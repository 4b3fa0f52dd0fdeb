import math

import pytest

import lvspread as lv


@pytest.fixture
def p1():
    return lv.reference_params()


def test_reaction_and_bounds(p1):
    fe, fd = lv.reaction_f(p1, (1.0, 0.0))
    assert fe == pytest.approx(0.1823333, rel=1e-6)
    assert fd == pytest.approx(0.001)
    ne, nd = lv.density_bounds(p1)
    assert (ne, nd) == pytest.approx((1.243852, 1.878405), rel=1e-6)


def test_invalid_params_raise():
    with pytest.raises(ValueError, match="D_e"):
        lv.ModelParams(-0.3, 1.5, 1.1, 0.2, 1.0, 1.0, 0.8, 0.7, 0.001, 0.00025)


def test_speed_and_limits(p1):
    c_star, beta, q_ratio = lv.min_speed(p1)
    assert abs(c_star - 1.529978) <= 1e-2
    assert abs(beta - 0.866025) <= 0.05
    v_e, v_d, v_f = lv.speed_limits(p1)
    assert v_f == pytest.approx(1.5299782, abs=1e-6)
    assert lv.classify_regime(p1) == "anomalous"
    assert lv.q_ratio_from_ratios(0.2 / 1.1, 0.2, 4.0) == pytest.approx(1.945195, rel=1e-6)


def test_pf_eigenpair():
    eta, (qe, qd) = lv.pf_eigenpair(2.0, 1.0, 1.0, 2.0)
    assert eta == pytest.approx(3.0)
    assert qe == pytest.approx(1 / math.sqrt(2))
    with pytest.raises(ValueError):
        lv.pf_eigenpair(1.0, 0.0, 0.0, 2.0)


def test_equilibria_and_conditions(p1):
    eqs = lv.equilibria_of_f(p1)
    stable = [e for e in eqs if e[2] == "stable"]
    assert len(stable) == 1
    assert lv.check_conditions(p1)["intersmall"][0] is False
    with pytest.raises(lv.ConditionError):
        lv.k_minus(p1)


def test_mu_curve(p1):
    base = lv.ModelParams(0.3, 1.5, 1.1, 0.2, 1 / 1.2, 1.0, 0.8, 0.7, 0.0, 0.0)
    rows = lv.mu_curve(base, lv.MutationScaling(1.0, 0.001, 0.00025), [1e-6, 1e-3, 1.0], jobs=2)
    etas = [r[1] for r in rows]
    assert etas == sorted(etas, reverse=True)
    assert rows[0][3] == pytest.approx(1.945195, abs=1e-3)


def test_verify_small_domain_is_inconclusive(p1):
    rep = lv.verify(p1, L=120.0, nx=1201, t_end=200.0)
    assert rep["status"] == "inconclusive"
