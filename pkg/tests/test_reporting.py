from ringlab.reporting import VerifyResult, emit_report


def _r(claim, status):
    return VerifyResult(claim=claim, description="d", expected="e",
                        computed="c", status=status, seconds=0.5)


def test_empty_report():
    assert emit_report([], "csv") == "claim,status,expected,computed,reason,seconds\r\n"
    assert emit_report([], "json") == "[]\n"


def test_single_pass_row():
    out = emit_report([_r("X", "pass")], "csv")
    assert out.splitlines()[1].startswith("X,pass")


def test_failures_sorted_first():
    rows = [_r("A", "pass"), _r("B", "fail"), _r("C", "skipped"), _r("D", "fail")]
    out = emit_report(rows, "text").splitlines()
    assert [line.split()[0] for line in out[:4]] == ["FAIL", "FAIL", "PASS", "SKIP"]
    assert out[0].split()[1] == "B" and out[1].split()[1] == "D"  # stable


def test_json_stable_fields():
    import json
    doc = json.loads(emit_report([_r("X", "pass")], "json"))
    assert list(doc[0].keys()) == ["claim", "status", "description", "expected",
                                   "computed", "reason", "seconds"]
