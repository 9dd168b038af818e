import json

import numpy as np
import pytest

import gbs_locc as g


def test_decide_indistinguishable_d4():
    r = g.check("0,0;1,0;0,1;1,2", 4)
    assert r.verdict == g.Verdict.INDISTINGUISHABLE
    assert r.condition == g.Condition.THM2
    assert r.witness is None


def test_discriminant_witness_and_json():
    s = g.GbsSet(6, [(0, 0), (0, 1), (1, 0), (1, 4), (5, 5)])
    assert g.Gpm(2, 3, 6) in g.discriminant_set(s)
    r = g.decide(s)
    assert r.verdict == g.Verdict.DISTINGUISHABLE
    assert r.mode == g.Mode.ONE_WAY
    doc = json.loads(r.to_json())
    assert list(doc) == ["d", "set", "verdict", "mode", "condition", "witness", "index_cardinality", "wang_gap"]
    assert doc["witness"] == list(r.witness)


def test_index_set_uses_inf():
    s = g.GbsSet.parse("0,0;0,1;0,2;0,3", 5)
    assert g.index_set(s) == ["inf"]
    assert len(g.wang_gap(s)["admissible"]) == 6


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        g.GbsSet.parse("0,0;4,0", 4)
    with pytest.raises(g.ParseError):
        g.GbsSet.parse("0,0;0,0", 4)


def test_classify_d4_sizes():
    c = g.classify(4, 4)
    assert [e["size"] for e in c["classes"]] == [1, 6, 192, 48, 16, 12, 24, 96, 48, 12]
    assert c["covered"] == c["total_standard"] == 455


def test_orbit_and_membership():
    s = g.GbsSet.parse("0,0;0,2;1,0;3,2", 4)
    members = g.orbit(s)
    assert len(members) == 12
    assert g.membership(g.GbsSet.parse(members[-1], 4), s)


def test_symplectic_counts():
    assert [len(g.enumerate_symplectic(d)) for d in range(2, 7)] == [6, 24, 48, 120, 144]
    assert g.symplectic_group_order(12) == 1152


def test_weyl_congruence_count():
    assert len(g.solve_weyl_congruence(2, 4, 6)) == 6 * 2


def test_numeric_certificates():
    a, b = g.Gpm(1, 0, 5), g.Gpm(0, 1, 5)
    ua, ub = g.gpm_matrix(a), g.gpm_matrix(b)
    w = np.exp(2j * np.pi * g.weyl_exponent(a, b) / 5)
    assert np.allclose(ua @ ub, w * ub @ ua)
    l2 = g.GbsSet.parse("1,2;1,0;3,2;3,0", 4)
    psi = g.commuting_witness(l2)
    assert psi.shape == (4,)
    assert g.witness_deviation(l2, psi) < g.VERIFY_TOLERANCE
    l4 = g.GbsSet.parse("1,2;1,3;2,2;0,1", 4)
    assert g.witness_deviation(l4, g.composite_witness(l4)) < g.VERIFY_TOLERANCE
    l1 = g.GbsSet.parse("0,0;0,1;1,0;1,4;5,5", 6)
    assert g.one_way_gram_check(l1, g.Gpm(2, 3, 6)) < g.VERIFY_TOLERANCE


def test_cli_entry():
    code, out, err = g.run_cli(["verify", "-d", "4", "-s", "0,0;1,0;0,1;1,2"])
    assert code == 5
    code, out, _ = g.run_cli(["tables", "--table", "2"])
    assert code == 0
    assert out == g.golden_table2_fixture()
