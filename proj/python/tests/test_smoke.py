import math

import numpy as np
import pytest

import superbound as sb


def ket(da, db, i, j):
    m = np.zeros((da, db), dtype=complex)
    m[i, j] = 1.0
    return m


def bell(sign=1.0):
    return np.array([[1.0, 0.0], [0.0, sign]], dtype=complex) / math.sqrt(2.0)


def test_entanglement_of_bell_and_product():
    assert sb.entanglement(bell()) == pytest.approx(1.0, abs=1e-12)
    assert sb.entanglement(ket(2, 3, 1, 2)) == pytest.approx(0.0, abs=1e-12)
    p = sb.schmidt_probabilities(bell())
    assert np.allclose(p, [0.5, 0.5])


def test_reduced_states_have_equal_entropy():
    x = sb.haar_state(2, 3, seed=4)
    sa = sb.von_neumann_entropy(sb.reduced_density_matrix(x, "A"))
    sb_ = sb.von_neumann_entropy(sb.reduced_density_matrix(x, "B"))
    assert sa == pytest.approx(sb_, abs=1e-12)
    assert sb.reduced_density_matrix(x, "B").shape == (3, 3)


def test_coefficient_table():
    c = sb.normalization_coeffs(5)
    assert c["n_squared"] == [2, 3, 7, 43, 1806]
    assert c["n_squared_exact"] == [2, 3, 7, 43, 1806]
    assert abs(c["reciprocal_sum_residual"]) < 1e-12
    assert sb.normalization_coeffs(16)["n_squared_exact"] is None
    with pytest.raises(sb.DomainError):
        sb.normalization_coeffs(17)


def test_basis_is_orthogonal():
    m = sb.basis_matrix(6)
    assert np.abs(m @ m.T - np.eye(6)).max() < 1e-12


def test_constrained_worked_example():
    r = sb.evaluate_bound([0.5, 0.5], [ket(2, 2, 0, 0), ket(2, 2, 1, 1)], "constrained")
    assert r.lhs == pytest.approx(0.5, abs=1e-12)
    assert r.rhs == pytest.approx(1.0, abs=1e-12)
    assert r.holds()
    assert r.to_dict()["variant"] == "constrained"


def test_constraint_violation_raises():
    s = 1 / math.sqrt(2)
    with pytest.raises(sb.PreconditionError):
        sb.evaluate_bound([s, s], [bell(), bell(-1)], "constrained")
    r = sb.evaluate_bound([s, s], [bell(), bell(-1)], "unconstrained")
    assert r.superposition_entanglement == pytest.approx(0.0, abs=1e-12)


def test_minimized_reports_permutation():
    r = sb.evaluate_bound([0.2, 0.3, 0.4], [bell(), ket(2, 2, 0, 0), ket(2, 2, 1, 1)], "minimized")
    assert sorted(r.permutation) == [0, 1, 2]
    u = sb.evaluate_bound([0.2, 0.3, 0.4], [bell(), ket(2, 2, 0, 0), ket(2, 2, 1, 1)])
    assert r.rhs <= u.rhs + 1e-12


def test_biorthogonal_and_assistant():
    comps = [ket(3, 3, k, k) for k in range(3)]
    a = [1 / math.sqrt(3)] * 3
    assert sb.is_biorthogonal(comps)
    assert sb.exact_biorthogonal_entanglement(a, comps) == pytest.approx(math.log2(3), abs=1e-12)
    assert sb.superposition_entanglement(a, comps) == pytest.approx(math.log2(3), abs=1e-12)
    rep = sb.assistant_state_check(a, comps)
    assert rep.all_ok()
    assert rep.norm_partition_residual < 1e-12


def test_campaign_is_deterministic():
    cfg = {"n": 3, "dim_a": 3, "dim_b": 3, "family": "haar", "seed": 11}
    a = sb.run_campaign(cfg, 25, "constrained")
    b = sb.run_campaign(cfg, 25, "constrained", threads=2)
    assert a["records"] == b["records"]
    assert a["summary"]["violations"] == 0
    coeffs, comps = sb.draw_spec(cfg, 3)
    r = sb.evaluate_bound(coeffs, comps, "constrained")
    assert r.rhs == pytest.approx(a["records"][3]["rhs"], abs=1e-12)


def test_bad_config_raises():
    with pytest.raises(sb.SchemaError):
        sb.run_campaign({"n": 3}, 1)
