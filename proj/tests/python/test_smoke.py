"""Smoke tests for the python bindings."""

import pytest

import translatio as tl


def test_root_system_basics():
    rs = tl.RootSystem("A2")
    assert rs.rank == 2
    assert rs.num_positive_roots == 3
    assert rs.weyl_order() == 6
    roots = rs.positive_roots()
    assert ([1, 0], [1, 0]) in [tuple(r) for r in roots] or ([1, 0], [1, 0]) in roots


def test_bad_label_raises():
    with pytest.raises(ValueError):
        tl.RootSystem("Q7")


def test_weyl_dimension_and_multiset():
    assert tl.weyl_dimension("A2", "1,1") == 8
    entries = dict(tl.weight_multiset("A2", "1,1"))
    assert entries["0,0"] == 2
    assert sum(entries.values()) == 8


def test_triangle_delta_pretty():
    assert tl.triangle_delta("A1", mu="1", nu="-2", x="s1") == "⟨τ,α∨⟩ / (⟨τ,α∨⟩ - 1)"
    assert tl.triangle_delta("A2", mu="0,0", nu="1,1", x="w0") == "1"


def test_bernstein_delta():
    assert tl.bernstein_delta("A1", "1") == "(⟨τ,α∨⟩ + 2) / (⟨τ,α∨⟩ + 1)"


def test_delta_nu():
    out = tl.delta_nu("A1", "-2")
    assert "⟨τ,α∨⟩" in out


def test_identity_checker():
    reports = tl.check_identity("A2", "decomposition", bound=2, trials=10, seed=3)
    assert len(reports) == 1
    assert reports[0]["failures"] == 0
    assert reports[0]["instances"] > 0


def test_oracle_agreement():
    assert tl.oracle_matches_closed(1, -2)
    assert tl.oracle_delta(1, -2) == "(t) / (t - 1)"
    assert tl.oracle_trace(1, at_w0=True) == "(t + 2) / (t + 1)"
    assert tl.verify_pole_theorem(4)


def test_genericity():
    rs = tl.RootSystem("A1")
    assert rs.is_generic("1/2")
    assert not rs.is_generic("3")


def test_cli_reports_are_deterministic():
    import os
    import subprocess

    cli = os.environ.get("TRANSLATIO_CLI")
    if not cli:
        pytest.skip("CLI path not provided")
    cmd = [cli, "check", "--system", "A2", "--identity", "rotation",
           "--bound", "2", "--trials", "15", "--seed", "9", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.strip().startswith(b"{")
