import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from helpers import elements, validator
from qshuffle.cli import main
from qshuffle.words import FreeElement


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_shuffle_text(capsys):
    code, out, _ = run(capsys, "shuffle", "x", "xy")
    assert code == 0
    # coefficients print with decreasing powers of q
    assert out.strip() == "(q^2 + 1)*xxy + xyx"
    assert FreeElement.parse(out) == FreeElement.parse("(1 + q^2)*xxy + xyx")


def test_expression_operands(capsys):
    code, out, _ = run(capsys, "shuffle", "--expr", "(q + q^-1)*x", "--expr", "y")
    assert code == 0
    assert FreeElement.parse(out) == FreeElement.parse("(q + q^-1)*xy + (q^-1 + q^-3)*yx")
    code, out, _ = run(capsys, "free-mul", "x + y", "y")
    assert out.strip() == "xy + yy"


def test_commutator_and_truncate(capsys):
    assert run(capsys, "commutator", "x", "y", "--k", "1")[1].strip() == "(q - q^-3)*xy"
    assert run(capsys, "truncate", "--side", "right", "--letter", "y", "xy + 2*yy")[1].strip() == "x + 2*y"


def test_classify(capsys):
    assert run(capsys, "classify", "xyxyx")[1].strip() == "alternating W_-2"
    code, out, _ = run(capsys, "classify", "xyxyx", "xxyx", "--format", "json")
    data = json.loads(out)
    check = validator("classify.json")
    for item in data:
        check.validate(item)
    assert data[1]["kind"] == "NotInU"


def test_verify_family(capsys):
    code, out, _ = run(capsys, "verify", "--family", "P4.xcomm1.1", "--max", "4")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 5 and all(l.startswith("PASS") for l in lines)
    code, out, _ = run(capsys, "verify", "--family", "A.3", "--params", "2,1", "--format", "json")
    (report,) = json.loads(out)
    validator("report.json").validate(report)
    assert report["params"] == [2, 1]


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify-all", "--bound", "2", "--order", "4")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("164 families")
    code, out, _ = run(capsys, "verify-all", "--group", "A.", "--bound-two", "2", "--format", "json")
    data = json.loads(out)
    validator("verify_all.json").validate(data)
    assert data["passed"] and data["families"] == 18
    ids = [(r["id"], r["params"]) for r in data["reports"]]
    assert ids == sorted(ids)


def test_verification_failure_exit_status(capsys, monkeypatch):
    from qshuffle import relations

    fam = relations.RelationFamily("T.bad", 0, lambda: (relations.word("x"), relations.word("y")), "", "test")
    monkeypatch.setitem(relations.CATALOG, "T.bad", fam)
    code, out, _ = run(capsys, "verify", "--family", "T.bad")
    assert code == 1
    assert "difference: x - y" in out


def test_series_commands(capsys):
    code, out, _ = run(capsys, "series", "Gh", "--order", "2")
    assert out.strip() == "1 + (xy)*t + (xyxy)*t^2"
    code, out, _ = run(capsys, "series", "Gh", "Gh", "--neg-left", "--order", "2", "--format", "json")
    validator("series.json").validate(json.loads(out))
    code, out, _ = run(capsys, "series", "--identity", "S6.5.2", "--order", "5")
    assert code == 0 and out.startswith("PASS S6.5.2[5]")


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "json")
    data = json.loads(out)
    validator("catalog.json").validate(data)
    assert len(data) == 164
    code, out, _ = run(capsys, "catalog")
    assert len(out.strip().splitlines()) == 164


@pytest.mark.parametrize("argv", [
    ["shuffle", "x", "xz"],
    ["shuffle", "x"],
    ["verify", "--family", "nope"],
    ["classify", "abc"],
    ["series", "H"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("qshuffle:")


def test_parse_error_names_position(capsys):
    _, _, err = run(capsys, "shuffle", "x", "xy + q^")
    assert "position 7" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["commutator", "x", "y", "--k", "3"])
    assert info.value.code == 2


def test_format_from_environment():
    env = {"QSHUFFLE_FORMAT": "json", "PATH": ""}
    out = subprocess.run([sys.executable, "-m", "qshuffle", "shuffle", "x", "y"], env=env,
                         capture_output=True, text=True, check=True)
    validator("element.json").validate(json.loads(out.stdout))


def test_format_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "json", "shuffle", "x", "y")
    assert json.loads(out) == {"terms": [{"word": "xy", "coeff": "1"}, {"word": "yx", "coeff": "q^-2"}]}


@settings(max_examples=30)
@given(elements(), elements())
def test_printed_output_reparses(a, b):
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(["shuffle", f"--expr={a}", f"--expr={b}"]) == 0
    from qshuffle.shuffle import shuffle

    assert FreeElement.parse(buf.getvalue()) == shuffle(a, b)
