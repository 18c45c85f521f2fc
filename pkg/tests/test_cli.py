"""Command-line interface: record schemas, frozen outputs, exit codes."""

import json

import pytest

from zetalab import cli


def run_cli(args, capsys):
    rc = cli.main(args)
    captured = capsys.readouterr()
    records = [json.loads(line) for line in captured.out.splitlines() if line]
    return rc, records, captured.err


def test_const_zeta_frozen(capsys):
    rc, records, _ = run_cli(["const", "--kind", "zeta", "--s", "2", "--digits", "10"], capsys)
    assert rc == 0
    assert len(records) == 1
    rec = records[0]
    assert rec["schema"] == 1
    assert rec["kind"] == "const"
    assert rec["value"] == "1.644934066"


def test_const_beta_and_dedekind_frozen(capsys):
    rc, records, _ = run_cli(["const", "--kind", "beta", "--s", "2", "--digits", "12"], capsys)
    assert rc == 0
    assert records[0]["value"] == "0.915965594177"
    rc, records, _ = run_cli(["const", "--kind", "dedekind", "--s", "3", "--digits", "10"], capsys)
    assert rc == 0
    assert records[0]["value"] == "1.164728403"


def test_const_insufficient_precision_exits_2(capsys):
    rc, records, err = run_cli(["const", "--kind", "zeta", "--s", "2", "--digits", "100"], capsys)
    assert rc == 2
    assert records[0]["status"] == "indeterminate"
    assert "--precision-bits" in err


def test_rn_rows_frozen(capsys):
    rc, records, _ = run_cli(["rn", "--max", "5", "--check-lattice"], capsys)
    assert rc == 0
    rows = [r for r in records if r["kind"] == "rn"]
    assert [(r["n"], r["r_divisor"], r["r_lattice"]) for r in rows] == [
        (1, 1, 4),
        (2, 1, 4),
        (3, 0, 0),
        (4, 1, 4),
        (5, 2, 8),
    ]
    assert all(r["jacobi_ok"] is True for r in rows)
    summary = records[-1]
    assert summary["kind"] == "rn_summary"
    assert summary["checked"] == 5 and summary["mismatches"] == 0


def test_cf_rational_expansion(capsys):
    rc, records, _ = run_cli(["cf", "--target", "rational", "--value", "355/113"], capsys)
    assert rc == 0
    head = records[0]
    assert head["kind"] == "cf"
    assert head["quotients"] == [3, 7, 16]
    assert head["termination"] == "exact"
    convs = [r for r in records if r["kind"] == "convergent"]
    assert [(c["p"], c["q"]) for c in convs] == [(3, 1), (22, 7), (355, 113)]
    assert all(c["dirichlet_ok"] == "true" for c in convs)
    assert all(c["determinant_ok"] is True for c in convs)


def test_cf_pi_prefix(capsys):
    rc, records, _ = run_cli(["cf", "--target", "pi", "--terms", "5"], capsys)
    assert rc == 0
    assert records[0]["quotients"] == [3, 7, 15, 1, 292]
    assert records[0]["termination"] == "max_terms"


def test_seq17_depth_one_entry(capsys):
    rc, records, _ = run_cli(["seq17", "--s", "3", "--depth", "1"], capsys)
    assert rc == 0
    entries = [r for r in records if r["kind"] == "entry"]
    assert len(entries) == 1
    e = entries[0]
    assert (e["m"], e["n"], e["r"], e["s_den"]) == (0, 0, 2, 1)
    assert e["identity_exact"] is True
    assert e["err_positive"] == "true"
    summary = records[-1]
    assert summary["kind"] == "seq17_summary"
    assert summary["crossover_matches_prediction"] is True


def test_lemma6_summary_shape(capsys):
    rc, records, _ = run_cli(["lemma6", "--s", "3", "--xs", "100,1000"], capsys)
    assert rc == 0
    summary = records[-1]
    assert summary["kind"] == "scaling_summary"
    assert summary["c0_sign"] == -1
    scaled = [r for r in records if r["kind"] == "scaling"]
    assert [r["x"] for r in scaled] == [100, 1000]


def test_case1_crossover(capsys):
    rc, records, _ = run_cli(["case1", "--hypothesis", "6/5", "--terms", "4"], capsys)
    assert rc == 0
    summary = records[-1]
    assert summary["kind"] == "case1_summary"
    assert summary["c3"] == "1/5"
    assert summary["crossover_index"] == 1
    assert summary["crossover_matches_prediction"] is True


def test_beta_mirror_streams(capsys):
    rc, records, _ = run_cli(["beta-mirror", "--s", "2", "--depth", "3"], capsys)
    assert rc == 0
    a = [(r["a"], r["b"]) for r in records if r["kind"] == "stream_a"]
    b = [(r["p"], r["q"]) for r in records if r["kind"] == "stream_b"]
    assert a == [(1, 1), (2, 1), (3, 2)]
    assert b == [(1, 1), (1, 2), (2, 3)]
    assert records[-1]["kind"] == "beta_mirror_summary"


def test_verify_single_criterion(capsys):
    rc, records, _ = run_cli(["verify", "--suite", "10"], capsys)
    assert rc == 0
    assert len(records) == 1
    rec = records[0]
    assert rec["kind"] == "criterion"
    assert rec["number"] == 10
    assert rec["status"] == "pass"
    assert "elapsed" not in rec


def test_output_is_deterministic(capsys):
    args = ["seq17", "--s", "3", "--depth", "2"]
    assert cli.main(args) == 0
    first = capsys.readouterr().out
    assert cli.main(args) == 0
    second = capsys.readouterr().out
    assert first == second


def test_csv_format(capsys):
    rc = cli.main(["rn", "--max", "3", "--format", "csv"])
    out = capsys.readouterr().out
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("schema,kind,")
    assert lines[1].split(",")[:3] == ["1", "rn", "1"]


def test_precision_env_override(capsys, monkeypatch):
    monkeypatch.setenv("ZETALAB_PRECISION_BITS", "512")
    rc, records, _ = run_cli(["const", "--kind", "zeta", "--s", "2", "--digits", "10"], capsys)
    assert rc == 0
    assert records[0]["value"] == "1.644934066"
    monkeypatch.setenv("ZETALAB_PRECISION_BITS", "not-a-number")
    with pytest.raises(SystemExit):
        cli._build_parser().parse_args(["const", "--kind", "zeta", "--s", "2"])
    assert cli.main(["const", "--kind", "zeta", "--s", "2", "--digits", "10"]) == 2


def test_unknown_subcommand_exits_2(capsys):
    assert cli.main(["frobnicate"]) == 2
