import json
from pathlib import Path

import pytest

from snrkit.cli import main
from snrkit.report import emit_report
from snrkit.snrfile import parse_documents, parse_snr

DATA = Path(__file__).parent / "data"


def run(capsysbinary, *argv):
    code = main(list(argv))
    out = capsysbinary.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path, capsysbinary):
    paths = {}
    for name in ("T", "L", "S"):
        code, out, _ = run(capsysbinary, "example", "--name", name)
        assert code == 0
        p = tmp_path / f"{name}.snr"
        p.write_bytes(out)
        paths[name] = str(p)
    bad = tmp_path / "bad.snr"
    bad.write_text("seminearring bad\norder 2\nadd\n1 0\n0 0\nmul\n0 0\n0 0\nend\n")
    paths["bad"] = str(bad)
    garbled = tmp_path / "garbled.snr"
    garbled.write_text("seminearring x\norder 2\nadd\n0 0 0\n")
    paths["garbled"] = str(garbled)
    return paths


def test_example_documents_parse(files):
    doc = parse_snr(Path(files["T"]).read_text())
    assert doc.name == "T" and doc.order == 4
    assert parse_snr(Path(files["S"]).read_text()).order == 40


def test_check(files, capsysbinary):
    code, out, _ = run(capsysbinary, "check", files["T"])
    assert code == 0 and out == b"ok: T is a seminearring of order 4\n"
    code, _, err = run(capsysbinary, "check", files["bad"])
    assert code == 2 and b"not associative" in err
    code, _, err = run(capsysbinary, "check", files["garbled"])
    assert code == 2 and b"line 4" in err


def test_classify_json(files, capsysbinary):
    code, out, _ = run(capsysbinary, "--json", "classify", files["T"])
    data = json.loads(out)
    assert code == 0
    assert data["classification"]["glcr"] is True
    assert data["classification"]["grcr"] is False
    assert data["classification"]["witnesses"]["grcr"] == [3]


def test_json_flag_after_subcommand(files, capsysbinary):
    _, a, _ = run(capsysbinary, "--json", "classify", files["T"])
    _, b, _ = run(capsysbinary, "classify", files["T"], "--json")
    assert a == b


def test_greens(files, capsysbinary):
    code, out, _ = run(capsysbinary, "greens", files["T"], "--relation", "H")
    assert code == 0
    assert out == b"greens (additive reduct):\n  H+: {u c} {a} {b}\n"
    _, out, _ = run(capsysbinary, "--json", "greens", files["T"])
    g = json.loads(out)["greens"]
    assert g["classes"]["J"] == [[0, 3], [1, 2]]
    assert set(g) == {"order", "l_class", "r_class", "h_class", "j_class", "classes"}


def test_decompose(files, capsysbinary):
    code, out, _ = run(capsysbinary, "--json", "decompose", files["S"])
    comps = json.loads(out)["components"]
    assert code == 0
    assert [len(c["elements"]) for c in comps] == [8, 16, 16]
    assert comps[0]["flags"]["regular"] is False
    assert comps[0]["failure_witness_names"] == ["u_0_1_0_0"]


def test_verify_text(files, capsysbinary):
    code, out, _ = run(capsysbinary, "verify", files["T"])
    lines = out.decode().splitlines()
    assert code == 0
    assert len(lines) == 7 and all(line.endswith(" EQUIVALENT") for line in lines)
    assert not any("NOT" in line for line in lines)


def test_verify_inequivalence_exit_code(files, capsysbinary):
    code, out, _ = run(capsysbinary, "verify", files["L"], "--theorem", "mult-inv")
    assert code == 3
    assert out == b"mult_inv: (1) false (2) true (3) true NOT EQUIVALENT\n"
    code, _, _ = run(capsysbinary, "verify", files["L"], "--theorem", "mult-reg", "--zero-symmetric")
    assert code == 0


def test_verify_single_theorem_json(files, capsysbinary):
    code, out, _ = run(capsysbinary, "--json", "verify", files["S"], "--theorem", "mult-reg")
    (report,) = json.loads(out)["theorems"]
    assert code == 0
    assert report["theorem_id"] == "mult_reg"
    assert [s["holds"] for s in report["statements"]] == [False, False, False]
    assert report["equivalent"] is True


def test_enumerate(capsysbinary):
    assert run(capsysbinary, "enumerate", "--order", "2", "--count-only")[1] == b"count: 40\n"
    assert run(capsysbinary, "enumerate", "--order", "2", "--up-to-iso", "--count-only")[1] == b"count: 22\n"
    code, out, _ = run(capsysbinary, "enumerate", "--order", "2", "--filter", "glcr", "--filter", "grcr")
    docs = parse_documents(out.decode())
    assert code == 0 and docs
    code, out, _ = run(capsysbinary, "--json", "enumerate", "--order", "2", "--limit", "3")
    assert len(json.loads(out)["structures"]) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["enumerate"],
        ["enumerate", "--order", "9"],
        ["enumerate", "--order", "2", "--filter", "nope"],
        ["example", "--name", "S", "--p", "4"],
        ["greens", "x.snr", "--relation", "D"],
    ],
)
def test_usage_errors(argv, capsysbinary):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_zero_symmetric_needs_theorem(files, capsysbinary):
    assert run(capsysbinary, "verify", files["T"], "--zero-symmetric")[0] == 1


def test_missing_file(capsysbinary):
    assert run(capsysbinary, "classify", "/nonexistent/file.snr")[0] == 2


def test_determinism(files, capsysbinary):
    commands = [
        ["check", files["S"]],
        ["classify", files["S"]],
        ["greens", files["S"]],
        ["decompose", files["S"]],
        ["verify", files["L"]],
        ["enumerate", "--order", "3", "--up-to-iso"],
        ["example", "--name", "L-matrix", "--p", "3"],
    ]
    for argv in commands:
        for fmt in ([], ["--json"]):
            first = run(capsysbinary, *fmt, *argv)
            second = run(capsysbinary, *fmt, *argv)
            assert first == second


def test_emit_report_empty_components():
    data = json.loads(emit_report({"components": []}, "json"))
    assert data == {"components": []}
    with pytest.raises(ValueError):
        emit_report({"other": 1}, "json")
