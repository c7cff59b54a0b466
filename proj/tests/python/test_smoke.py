import cmath
import math

import pytest

import selberg_lab as sl


def test_special_values():
    assert abs(sl.gamma(0.5) - math.sqrt(math.pi)) < 1e-14
    assert abs(sl.zeta(2) - math.pi**2 / 6) < 1e-13
    assert abs(sl.lambda_completed(3) - sl.lambda_completed(-2)) < 1e-14
    with pytest.raises(sl.PoleAt):
        sl.zeta(1)


def test_scattering_matrix_is_unitary_on_the_line():
    m = sl.s0(0.5 + 2j)
    for i in range(3):
        for j in range(3):
            s = sum(m[i][l] * m[j][l].conjugate() for l in range(3))
            assert abs(s - (1 if i == j else 0)) < 1e-10
    with pytest.raises(sl.SingularAt):
        sl.s0(0.25 + 7.0672j)


def test_character_and_eigen_solver():
    assert sl.omega_row(-7, 9) == 1
    t = sl.solve_tau_k(1e-6, 1)
    assert abs(t - 0.2433) < 1e-3
    assert abs(sl.solve_tau_k(sl.solve_a_k(1.0, 5), 5) - 1.0) < 1e-9


def test_resonance_and_asymptotics():
    r = sl.solve_resonance(3.0, 40)
    predicted = sl.asymptotic("resonance-alpha-of-t", t=3.0, k=40)
    assert abs(r.alpha / predicted - 1) < 1 / 40
    assert r.sigma < 0.5
    with pytest.raises(sl.ResonanceHit):
        sl.d00_model(r.alpha, complex(r.sigma, r.t))
    assert len(sl.formula_names()) == 7
    with pytest.raises(sl.SelbergError):
        sl.asymptotic("nope")


def test_series_fit_and_toys():
    s, tail = sl.phi_series(0.0, 2.0)
    assert abs(s - sl.phi_closed_form_alpha0(2.0)) < tail
    alphas = [math.exp(-3 - 0.1 * i) for i in range(50)]
    values = [2.0 + 3.0 / abs(math.log(a)) for a in alphas]
    assert abs(sl.fit_limit(alphas, values)[0] - 2.0) < 1e-8
    assert abs(sl.project_kI([1.5] * 19) - 1.5) < 1e-14
    alpha_k, slope, predicted = sl.avoided_crossing_slope(5.0, 1 + 1j, 16)
    assert abs(slope / predicted - 1) < 0.05
    ak = sl.loop_touchings(5.5, 0.8, 0.5, -0.35 + 0.75j, 0.7, [10, 11])
    assert abs(ak[1] / ak[0] - cmath.exp(-math.pi / 5.5).real) < 1e-3 * ak[1] / ak[0]


def test_cli_entry(tmp_path):
    code, out, _ = sl.run_cli(["verify-identities", "--output-dir", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "report.csv").read_text().startswith("check_name,value,tolerance,pass\n")
    code, _, err = sl.run_cli(["no-such-command"])
    assert code == 2 and err
