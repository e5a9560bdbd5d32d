from locdom.ledger import CounterexampleLedger


def test_ledger_record(tmp_path):
    path = tmp_path / "ledger.jsonl"
    ledger = CounterexampleLedger(str(path))
    ledger.record({"graph6": "EkSg", "theorem": "code_chain", "parameters": {"n": 6}})
    ledger.record({"graph6": "@", "theorem": "ld_order_bound", "detail": "n=1"})
    events = list(ledger.read())
    assert len(events) == 2
    assert events[0].graph6 == "EkSg"
    assert events[0].parameters == {"n": 6}
    assert events[0].detail == ""
    assert events[1].theorem == "ld_order_bound"
    assert events[1].timestamp


def test_ledger_appends_across_instances(tmp_path):
    path = tmp_path / "ledger.jsonl"
    CounterexampleLedger(path).record({"graph6": "@", "theorem": "code_chain"})
    CounterexampleLedger(path).record({"graph6": "A_", "theorem": "code_chain"})
    assert [e.graph6 for e in CounterexampleLedger(path).read()] == ["@", "A_"]
    assert len(path.read_text(encoding="utf-8").splitlines()) == 2
