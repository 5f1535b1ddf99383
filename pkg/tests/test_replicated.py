import pytest

from silt import replicated as rm


def test_realizable_run_frozen_a2(a2):
    crep = rm.realizable_complements(a2, a2.parse_stalk_sum("P1"), 1)
    assert crep.members == [("P2", 0), ("S1", 0), ("S1", 1)]
    assert crep.degrees == [0, 0, 1]
    assert crep.t == 2
    assert crep.bound_ok
    assert [p.flag for p in crep.pairs] == [
        rm.FLAG_SHORT_EXACT, rm.FLAG_MEDIATED]
    assert crep.pairs[0].mid.pretty() == "{P1}"
    assert crep.pairs[0].ext1 == 1


def test_realizable_rejects_shifted_core(a2):
    with pytest.raises(ValueError):
        rm.realizable_complements(a2, a2.parse_stalk_sum("P2[-1]"), 1)


def test_exchange_report_ses_frozen(a2):
    crep = rm.realizable_complements(a2, a2.parse_stalk_sum("P1"), 1)
    rep = rm.exchange_report(crep)
    assert rep.ok, rep.failures()
    by = {(e.check, e.instance): e for e in rep.entries}
    key = next(k for k in by if k[0] == "model.exchange.ses.coker")
    assert by[key].expected == {"S1": 1}
    kernel_key = next(k for k in by if k[0] == "model.exchange.ses.kernel")
    assert by[kernel_key].got == 0


def test_bb_conditions_frozen(a2):
    crep = rm.realizable_complements(a2, a2.parse_stalk_sum("P1"), 1)
    rep0 = rm.bb_condition_report(crep, 0)
    assert rep0.ok, rep0.failures()
    data = next(e for e in rep0.entries if e.check == "bb.coker.simple").data
    assert data["gamma_i"]["dim"] == 3
    assert data["gamma_next"]["dim"] == 3

    rep1 = rm.bb_condition_report(crep, 1)
    assert rep1.ok
    data = next(e for e in rep1.entries if e.check == "bb.coker.simple").data
    # the top algebra splits into two blocks: identity Cartan matrix
    assert data["gamma_next"]["dim"] == 2
    assert data["gamma_next"]["cartan"] == [[1, 0], [0, 1]]

    with pytest.raises(ValueError):
        rm.bb_condition_report(crep, 2)


def test_t_bound_findings_a2_m1(a2):
    rep = rm.model_suite(a2, 1)
    assert rep.ok
    flagged = [e for e in rep.findings if not e.passed]
    assert len(flagged) == 3
    assert all(e.check == "model.t_bound" for e in flagged)
    assert all(e.data["t"] == 1 for e in flagged)
    flagged_cores = {e.instance for e in flagged}
    assert any("{P2}" in c for c in flagged_cores)
    assert any("{S1}" in c for c in flagged_cores)
    assert any("{P2[1]}" in c for c in flagged_cores)


def test_t_bound_findings_a2_m2_all_short(a2):
    # every m=2 realizable run on A2 is shorter than the requested bound;
    # the checks themselves still pass
    rep = rm.model_suite(a2, 2)
    assert rep.ok
    flagged = [e for e in rep.findings if not e.passed]
    assert len(flagged) == 8
    assert all(e.check == "model.t_bound" for e in flagged)


def test_bridge_consistency(a2):
    t = a2.parse_stalk_sum("P1,P2")
    clean = rm.bridge_consistency(a2, t, 1)
    assert clean.ok
    by_name = {e.check: e for e in clean.entries}
    assert by_name["bridge.marker_count"].got == 2
    corrupt = rm.bridge_consistency(a2, t, 1, corrupt=True)
    assert not corrupt.ok


def test_chain_text_rendering(a2):
    crep = rm.realizable_complements(a2, a2.parse_stalk_sum("P1"), 1)
    text = rm.chain_text(crep)
    assert "X0" in text and "X2" in text
    assert "t = 2" in text
    assert "short-exact" in text and "projective-injective-mediated" in text


def test_chain_report_json_roundtrip(a2):
    import json

    from silt.serialize import chain_report_json, dumps
    crep = rm.realizable_complements(a2, a2.parse_stalk_sum("P1"), 1)
    doc = json.loads(dumps(chain_report_json(crep)))
    assert doc["t"] == 2
    assert doc["bound_ok"] is True
    assert [m["name"] for m in doc["members"]] == ["P2", "S1", "S1[1]"]
    assert doc["schema"] == "silt/v1"
