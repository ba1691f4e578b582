import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from isochain import chain
from isochain.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_count_order():
    assert run("count", "--family", "oddp", "-n", "6", "--by", "order") == (0, "121\n")


def test_count_histograms():
    assert run("count", "--family", "oddp", "-n", "4", "--by", "height") == (0, "1 10 10 5 1\n")
    assert run("count", "--family", "ddp", "-n", "7", "--by", "fix") == (0, "137 22 21 35 35 21 7 1\n")


@pytest.mark.parametrize(
    "family, stat, fixture",
    [("oddp", "height", "oddp_height.csv"), ("oddp", "fix", "oddp_fix.csv"), ("ddp", "fix", "ddp_fix.csv")],
)
def test_table_csv_is_byte_exact(family, stat, fixture):
    code, out = run("table", "--family", family, "--stat", stat, "--max-n", "7", "--format", "csv")
    assert code == 0
    assert out.encode() == (FIXTURES / fixture).read_bytes()


def test_table_text_and_json():
    code, out = run("table", "--family", "oddp", "--stat", "height", "--max-n", "3", "--format", "text")
    assert code == 0 and out.splitlines()[-1].split() == ["3", "1", "6", "4", "1", "12"]
    code, out = run("table", "--family", "oddp", "--stat", "height", "--max-n", "3", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[3]["values"] == [1, 6, 4, 1] and rows[3]["sum"] == 12


def test_enumerate_text_round_trips():
    code, out = run("enumerate", "--family", "oddp", "-n", "2")
    assert code == 0
    assert out == "[n=2] 0\n[n=2] 1->1\n[n=2] 2->1\n[n=2] 2->2\n[n=2] 1->1 2->2\n"
    assert [chain.to_text(chain.parse_text(line)) for line in out.splitlines()] == out.splitlines()


def test_enumerate_json():
    code, out = run("enumerate", "--family", "ddp", "-n", "3", "--format", "json")
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 13
    assert {"n": 3, "pairs": [[2, 2], [3, 1]]} in records
    assert all(chain.to_json(chain.from_record(r)) == line for r, line in zip(records, out.splitlines()))


def test_enumerate_csv():
    code, out = run("enumerate", "--family", "oddp", "-n", "2", "--format", "csv")
    assert out.splitlines() == ["n,height,domain,image", "2,0,,", "2,1,1,1", "2,1,2,1", "2,1,2,2", "2,2,1 2,1 2"]


@pytest.mark.parametrize("family", ["ddp", "oddp"])
@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_fast_and_oracle_streams_identical(family, fmt):
    for n in range(0, 7):
        slow = run("enumerate", "--family", family, "-n", str(n), "--format", fmt)
        fast = run("enumerate", "--family", family, "-n", str(n), "--format", fmt, "--fast")
        assert slow == fast


def test_fast_rejects_other_family():
    code, _ = run("enumerate", "--family", "dp", "-n", "3", "--fast")
    assert code == 2


def test_props_ddp3():
    code, out = run("props", "--family", "ddp", "-n", "3")
    assert code == 0
    lines = out.splitlines()
    assert "zero_e_unitary=false witness_e=[n=3] 1->1 2->2 witness_s=[n=3] 2->2 3->1" in lines
    assert "j_trivial=true" in lines
    assert "ample=true" in lines
    assert any(line.startswith("regular=false") for line in lines)


def test_props_json():
    code, out = run("props", "--family", "oddp", "-n", "3", "--format", "json")
    record = json.loads(out)
    assert record["zero_e_unitary"] is True
    assert record["categorical"] is False
    assert set(record["witness_a"]) == {"n", "pairs"}


def test_greens_outputs():
    code, out = run("greens", "--family", "ddp", "-n", "3")
    assert code == 0
    assert "J classes=13" in out.splitlines()
    code, out = run("greens", "--family", "oddp", "-n", "3", "--starred")
    assert "lstar_by_image=true" in out and "rstar_by_domain=true" in out
    assert "D* classes=" in out


def test_quotient():
    code, out = run("quotient", "-n", "4", "-p", "2", "--check")
    assert code == 0
    assert out.splitlines() == ["nonzero_elements=10", "associative=true", "zero_e_unitary=true", "categorical=true"]
    code, out = run("quotient", "-n", "3", "-p", "3")
    assert out.splitlines() == ["nonzero_elements=1", "[n=3] 1->1 2->2 3->3"]
    assert run("quotient", "-n", "3", "-p", "0")[0] == 2


def test_verify_all():
    code, out = run("verify", "--suite", "all", "--max-n", "6")
    assert code == 0, out
    assert out.splitlines()[-1].endswith("checks passed")
    assert not any(line.startswith("FAIL") for line in out.splitlines())


def test_verify_respects_ceiling():
    code, out = run("--ceiling", "3", "verify", "--suite", "formulas", "--max-n", "7")
    assert code == 0
    assert "n<=3" in out


def test_verify_reports_failure(monkeypatch):
    from isochain import counting

    monkeypatch.setattr(counting, "closed_order_oddp", lambda n: -1)
    code, out = run("verify", "--suite", "formulas", "--max-n", "3")
    assert code == 1
    assert "FAIL formulas/oddp_order" in out


def test_ceiling_errors_exit_2(monkeypatch, capsys):
    assert run("--ceiling", "3", "count", "--family", "i", "-n", "4")[0] == 2
    monkeypatch.setenv("ISOCHAIN_CEILING", "2")
    assert run("count", "--family", "i", "-n", "3")[0] == 2
    assert "ceiling" in capsys.readouterr().err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--family", "nope", "-n", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "isochain", "count", "--family", "ddp", "-n", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "66\n"
