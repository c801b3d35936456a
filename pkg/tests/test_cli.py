import json

from zwcalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_emits_sparse_json(capsys):
    code, out, _ = run(capsys, "eval", "--ring", "Z", "z(0,3)[1]")
    assert code == 0
    data = json.loads(out)
    assert data == {"d": 2, "in": 0, "out": 3, "entries": [
        {"out": "000", "in": "", "v": "1"},
        {"out": "111", "in": "", "v": "1"}]}


def test_eval_is_deterministic(capsys):
    _, out1, _ = run(capsys, "eval", "--ring", "Qi", "z(0,2)[1+i] ; x")
    _, out2, _ = run(capsys, "eval", "--ring", "Qi", "z(0,2)[1+i] ; x")
    assert out1 == out2


def test_normalize_matches_eval(capsys):
    code, out, _ = run(capsys, "normalize", "--ring", "Z", "w(0,2) ; (w(1,1) * id)")
    assert code == 0
    data = json.loads(out)
    assert data["rows"] == [{"v": "1", "w": "00"}, {"v": "1", "w": "11"}]
    code, out, _ = run(capsys, "eval", "--ring", "Z", data["term"])
    assert code == 0
    rebuilt = json.loads(out)
    assert {(e["out"], e["v"]) for e in rebuilt["entries"]} == {("00", "1"), ("11", "1")}


def test_roundtrip_verdict(capsys):
    code, out, _ = run(capsys, "roundtrip", "--ring", "Z",
                       "w(0,3) ; (cap * id)")
    assert code == 0 and json.loads(out)["agree"] is True


def test_check_axioms_small_bounds(capsys):
    code, out, err = run(capsys, "check-axioms", "--ring", "Z",
                         "--max-arity", "2", "--max-nm", "1",
                         "--labels", "0,1,-1")
    assert code == 0
    data = json.loads(out)
    assert data["failed"] == 0 and data["checked"] > 20
    assert "pass" in err  # human table on stderr


def test_check_derived_small_bounds(capsys):
    code, out, _ = run(capsys, "check-derived", "--ring", "Qi",
                       "--max-arity", "2", "--max-nm", "1",
                       "--labels", "0,1,i")
    assert code == 0
    assert json.loads(out)["failed"] == 0


def test_check_qudit(capsys):
    code, out, _ = run(capsys, "check-qudit", "--d", "4")
    assert code == 0
    data = json.loads(out)
    assert data["failed"] == 0 and data["d"] == 4


def test_universal_verb(capsys):
    state = json.dumps({"d": 3, "in": 0, "out": 2, "entries": [
        {"out": "01", "in": "", "v": "1"},
        {"out": "22", "in": "", "v": "1"}]})
    code, out, _ = run(capsys, "universal", "--d", "3", state)
    assert code == 0
    data = json.loads(out)
    assert data["roundtrip"] is True
    assert [r["w"] for r in data["normal_form"]["rows"]] == ["01", "22"]


def test_parse_errors_exit_2(capsys):
    code, _, err = run(capsys, "eval", "--ring", "Z", "w(0,3) ; id")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "eval", "--ring", "Z", "z(1,1)[i]")
    assert code == 2
    code, _, _ = run(capsys, "normalize", "--ring", "C", "id")
    assert code == 2


def test_zn_ring_flag(capsys):
    code, out, _ = run(capsys, "eval", "--ring", "Zn", "--mod", "2", "x")
    assert code == 0
    data = json.loads(out)
    assert {(e["out"], e["in"], e["v"]) for e in data["entries"]} == {
        ("00", "00", "1"), ("01", "10", "1"), ("10", "01", "1"), ("11", "11", "1")}


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "eval", "--ring", "Z", "--output", str(target), "cup")
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["out"] == 2
