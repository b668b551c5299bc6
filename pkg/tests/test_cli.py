import io
import json

import pytest

from quasisym.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_park_text():
    assert call("park", "83493", "--format", "text") == (0, "41251\n")


def test_product_r1_lists_ten_labels():
    code, text = call("product", "--r", "1", "11", "21", "--format", "text")
    assert code == 0
    assert text.strip() == ("G_1121 + G_1131 + G_1132 + G_1141 + G_1142 + G_1143 + G_2221 "
                            "+ G_2231 + G_2241 + G_3321")


def test_json_report_shape_and_determinism():
    code, a = call("coproduct", "--r", "2", "1133467")
    _, b = call("coproduct", "--r", "2", "1133467")
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "timing"}
    assert code == 0 and strip(a) == strip(b)
    report = json.loads(a)
    assert report["status"] == "ok" and "caps" in report["meta"]
    assert report["payload"]["coproduct"]["size"] == 9


@pytest.mark.parametrize("argv", [
    ("act", "2235559", "--action", "park", "--gens", "5"),
    ("act", "12", "--action", "free", "--gens", "2"),
    ("act", "2,1,0", "--action", "qsym", "--r", "inf", "--gens", "1 2"),
    ("act", "211324", "--action", "wqsym", "--r", "2", "--gens", "2"),
    ("orbit", "3114", "--r", "2", "--window", "5"),
    ("orbit", "231", "--action", "free", "--window", "4"),
    ("basis", "Gr", "3114", "--r", "2"),
    ("basis", "G", "12", "--trunc", "3"),
    ("basis", "M", "1,2", "--n", "4"),
    ("basis", "Mr", "2|1", "--r", "2", "--n", "3"),
    ("basis", "WQMr", "112", "--r", "2"),
    ("std", "823278"), ("blocks", "25461851"), ("encode", "972554"),
    ("decode", "--biword", "346/121 2/1 e 17/11 e 5/1"),
    ("decode", "--zseq", "0,3,0,0,6,4,5,0,2,0,1"),
    ("dims", "--n", "4", "--r", "2"), ("dims", "--n", "3", "--r", "inf"),
    ("trees", "--stat", "md", "--n", "4"), ("trees", "--stat", "chain", "--n", "3"),
    ("trees", "--stat", "count", "--n", "3"),
])
def test_commands_succeed(argv):
    code, out = call(*argv)
    assert code == 0
    json.loads(out)


def test_text_outputs():
    assert call("act", "2235559", "--action", "park", "--gens", "5", "--format", "text")[1] == "223555.10\n"
    assert call("decode", "--zseq", "0,3,0,0,6,4,5,0,2,0,1", "--format", "text")[1] == "972554\n"
    assert call("dims", "--n", "4", "--r", "2", "--format", "text")[1].startswith("56")


@pytest.mark.parametrize("argv", [
    ("frobnicate",), ("park", "8x3"), ("dims", "--n", "12"), ("product", "--r", "0", "1", "1"),
    ("decode",), ("decode", "--biword", "12/12"), ("blocks", "33"),
    ("act", "12", "--action", "free", "--gens", "0"),
])
def test_usage_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_cap_message(capsys):
    run(["dims", "--n", "12"], out=io.StringIO())
    err = capsys.readouterr().err
    assert "max_count_degree" in err


def test_verify_examples_passes():
    code, out = call("verify", "--suite", "examples")
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass"
    assert all(c["ok"] for c in report["suite"])


def test_verify_all_exit_zero():
    code, out = call("verify", "--suite", "all", "--format", "text")
    assert code == 0, "\n".join(l for l in out.splitlines() if l.startswith("FAIL"))
