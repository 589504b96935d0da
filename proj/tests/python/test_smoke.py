import pytest

import glnconverse as g


def test_inventory():
    rep = g.inventory(2, 3, 1)
    assert rep["schema"] == "glnconverse/1"
    assert rep["op"] == "inventory"
    assert rep["group_order"] == 48
    assert rep["cuspidal_count"] == 3
    assert rep["cuspidal_count_ok"]
    assert rep["omega_multiset_ok"]
    dims = [c["dim"] for c in rep["components"]]
    assert sorted(dims) == [2, 2, 2, 3, 3, 4]


def test_gamma_and_csv():
    rep = g.gamma(2, 3, 1)
    assert rep["all_ok"]
    assert rep["max_residual"] <= 1e-7
    assert len(rep["records"]) == 6
    csv = g.gamma_csv(2, 3, 1)
    lines = csv.strip().splitlines()
    assert lines[0] == "n,q,pi_id,tau_rank,tau_id,gamma_re,gamma_im,max_residual,probes"
    assert len(lines) == 7
    # determinism: a second run is byte-identical
    assert csv == g.gamma_csv(2, 3, 1)


def test_converse():
    rep = g.converse(2, 3, 1)
    assert rep["ok"]
    assert rep["failures"] == 0
    assert rep["cuspidal_count"] == 3


def test_audits():
    sp = g.special_pair_audit(2, 3, 1)
    assert sp["ok"]
    ha = g.height_audit(2, 3, 1)
    assert ha["ok"]
    assert ha["cell_sizes"] == [12, 36]
    cc = g.central_char_probe(2, 3, 1)
    assert cc["ok"]


def test_verify():
    assert "all" in g.verify_suites()
    rep = g.verify("fields", 2, 3, 1)
    assert rep["pass"]
    names = [c["name"] for c in rep["checks"]]
    assert any(n.startswith("fields.") for n in names)


def test_usage_error():
    with pytest.raises(ValueError):
        g.inventory(0, 3, 1)
    with pytest.raises(ValueError):
        g.verify("bogus", 2, 3, 1)
