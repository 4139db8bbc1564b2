"""Command-line interface: exit codes, stream formats, atomic output."""

from __future__ import annotations

import json

import pytest

from piseries.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_json_pass(capsys):
    code, out, _ = run(
        capsys, "verify", "--alpha", "1/2", "--a", "0", "--b", "0", "--c", "1",
        "--digits", "15",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert payload["spec"] == {"alpha": "1/2", "a": 0, "b": 0, "c": 1}
    assert set(payload) >= {"lhs", "rhs", "abs_error", "rel_error", "digits_agreed"}


def test_verify_text_format(capsys):
    code, out, _ = run(
        capsys, "verify", "--alpha", "1/2", "--a", "0", "--b", "0", "--c", "2",
        "--digits", "12", "--format", "text",
    )
    assert code == 0
    assert "PASS" in out


def test_verify_rigorous_mode(capsys):
    code, out, _ = run(
        capsys, "verify", "--alpha", "1/2", "--a", "-2", "--b", "-2", "--c", "0",
        "--digits", "6", "--mode", "rigorous",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "exact-rigorous"
    assert payload["tail_bound"] is not None


def test_verify_domain_error_exits_2(capsys):
    code, out, err = run(
        capsys, "verify", "--alpha", "1/2", "--a", "1", "--b", "1", "--c", "1",
    )
    assert code == 2
    assert "error:" in err and out == ""


def test_verify_malformed_alpha_exits_2(capsys):
    code, _, err = run(
        capsys, "verify", "--alpha", "banana", "--a", "0", "--b", "0", "--c", "1",
    )
    assert code == 2
    assert "error:" in err


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["transmogrify"])
    assert info.value.code == 2


def test_failure_exit_code_is_1(capsys, monkeypatch):
    # exit codes distinguish "ran and disagreed" (1) from "could not run" (2);
    # fabricate a failed report to exercise the mapping without breaking math
    import piseries.cli as cli

    real = cli.verify_spec

    def sabotaged(spec, **kwargs):
        report = real(spec, **kwargs)
        return type(report)(**{**report.__dict__, "passed": False})

    monkeypatch.setattr(cli, "verify_spec", sabotaged)
    code, out, _ = run(
        capsys, "verify", "--alpha", "1/2", "--a", "0", "--b", "0", "--c", "1",
        "--digits", "10",
    )
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_pi_text(capsys):
    code, out, _ = run(capsys, "pi", "--digits", "30", "--format", "text")
    assert code == 0
    # 30 significant digits, correctly rounded (…327|95… rounds up)
    assert out.splitlines()[0] == "3.14159265358979323846264338328"
    assert "agree" in out


def test_pi_json(capsys):
    code, out, _ = run(capsys, "pi", "--digits", "12", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "3.14159265359"
    assert payload["agreement_digits"] >= 12


def test_catalog_list_text(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert "ex-3.3" in out and "sp-3.9" in out


def test_catalog_list_json(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["entries"]) == 10
    assert len(payload["families"]) == 8


def test_generate_by_id_latex(capsys):
    code, out, _ = run(capsys, "generate", "--id", "ex-3.10", "--format", "latex")
    assert code == 0
    assert out.strip() == (
        r"\frac{2048}{3\pi}=217+36\sum_{n=1}^{\infty}"
        r"\frac{(\frac{1}{2})_n^2}{(n+2)!^2}"
    )


def test_generate_family_member(capsys):
    code, out, _ = run(capsys, "generate", "--id", "sp-3.5-k2", "--format", "text")
    assert code == 0
    assert "13 +" in out  # head 4k+5 at k=2


def test_generate_from_raw_parameters(capsys):
    code, out, _ = run(
        capsys, "generate", "--alpha", "2/3", "--a", "-1", "--b", "2", "--c", "4",
        "--format", "latex",
    )
    assert code == 0
    assert out.strip().startswith(r"\sum_{n=0}^{\infty}")


def test_generate_unknown_id(capsys):
    code, _, err = run(capsys, "generate", "--id", "ex-0.0")
    assert code == 2 and "error:" in err


def test_sweep_over_c(capsys):
    code, out, _ = run(
        capsys, "sweep", "--alpha", "1/2", "--a", "0", "--b", "0",
        "--c-range", "1..3", "--digits", "10", "--format", "text",
    )
    assert code == 0
    lines = [line for line in out.splitlines() if "PASS" in line]
    assert len(lines) == 3


def test_sweep_bad_range(capsys):
    code, _, err = run(
        capsys, "sweep", "--alpha", "1/2", "--a", "0", "--b", "0",
        "--c-range", "3..1",
    )
    assert code == 2 and "error:" in err


def test_out_flag_writes_file_atomically(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "verify", "--alpha", "1/3", "--a", "-1", "--b", "-1", "--c", "0",
        "--digits", "12", "--out", str(target),
    )
    assert code == 0
    assert out == ""  # everything went to the file
    payload = json.loads(target.read_text())
    assert payload["pass"] is True
    assert list(tmp_path.iterdir()) == [target]  # no stray temp files


def test_verify_catalog_all_pass(capsys):
    code, out, _ = run(
        capsys, "verify-catalog", "--digits", "10", "--threads", "4",
    )
    assert code == 0
    payload = json.loads(out)
    # 10 explicit entries + 8 families sampled at three k values each
    assert len(payload) == 34
    assert all(item["report"]["pass"] for item in payload)
    ids = [item["id"] for item in payload]
    assert ids == sorted(ids, key=ids.index)  # fixed submission order
    assert "ex-3.3" in ids and "sp-3.9-k2" in ids
