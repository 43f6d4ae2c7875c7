import json
from pathlib import Path

import pytest

from parasym.cli import run

FIXTURE = str(Path(__file__).resolve().parents[1] / "fixtures" / "sl6_extension.json")


def call(capsys, *args):
    code = run(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_example(capsys):
    code, out, _ = call(capsys, "classify", "--algebra", "sl", "--rank", "4", "--real-form", "R", "--xi", "1,2", "--format", "json")
    assert code == 0
    rows = [json.loads(x) for x in out.splitlines()]
    assert len(rows) == 1
    row = rows[0]
    assert row["components"] == ["(a1,a2)", "(a2,a1)"]
    assert row["homogeneity"] == [[2, 0], [1, 2]]
    assert (row["j1"], row["j2"]) == ("1", "-1")
    assert row["m"] == ["a1"]


def test_analyze_extension_text(capsys):
    code, out, _ = call(capsys, "analyze-extension", FIXTURE, "--format", "text")
    assert code == 0
    assert "normal: true" in out
    assert "Theta: {5}" in out
    assert "Lambda: {1,2}" in out
    assert "Phi: {}" in out
    assert "harmonic: {(E21,E51)->E62: 2}" in out


def test_roots_g2(capsys):
    code, out, _ = call(capsys, "roots", "--algebra", "g2", "--xi", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["module,degree,height,size", "a1,{1},1,2", "2a1+a2,{2},2,1", "3a1+a2,{3},3,2"]


def test_g2_block_has_two_rows(capsys):
    code, out, _ = call(capsys, "symmetries", "-a", "g2", "--xi", "1", "--real-form", "C", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert ",w4^1,2,{}," in lines[1]
    assert ",-1,1,{2a1+a2}," in lines[2]


def test_determinism(capsys):
    args = ["classify", "-a", "sl", "-n", "5", "--xi", "1,2,5", "--subsets", "--format", "json"]
    first = call(capsys, *args)
    second = call(capsys, *args)
    assert first == second and first[0] == 0
    parallel = call(capsys, *args, "--jobs", "2")
    assert parallel == first


def test_golden_components(capsys):
    code, out, _ = call(capsys, "components", "-a", "sl", "-n", "4", "--xi", "1,2", "--all")
    assert code == 0
    assert out == (
        "algebra  xi     component  homogeneity  regular  i_mu\n"
        "A4       {1,2}  (a1,a2)    {2,0}        true     {}\n"
        "A4       {1,2}  (a2,a1)    {1,2}        true     {1}\n"
        "A4       {1,2}  (a2,a3)    {-1,1}       false    {}\n"
    )


def test_doubled_components(capsys):
    code, out, _ = call(capsys, "components", "-a", "sp", "-n", "3", "--real-form", "C", "--xi", "1,1'", "--format", "json")
    assert code == 0
    pairs = [json.loads(x)["component"] for x in out.splitlines()]
    assert "(a1,a1')" in pairs


def test_psi_and_imu(capsys):
    code, out, _ = call(capsys, "psi", "-a", "sl", "-n", "4", "--xi", "1,2", "--components", "1,2", "--format", "json")
    assert code == 0 and json.loads(out)["psi"] == ["2"]
    code, out, _ = call(capsys, "imu", "-a", "sl", "-n", "4", "--xi", "1,2", "--components", "2,1", "--format", "json")
    assert code == 0 and json.loads(out)["i_mu"] == ["1"]


def test_twistor(capsys):
    code, out, _ = call(
        capsys, "twistor", "-a", "sl", "-n", "5", "--xi", "1,2,3,5", "--components", "2,1", "--psi1", "1", "--format", "json"
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["regular"] is False and rec["offending"] == ["(a2,a1)"]


def test_reduce_success_and_domain_failure(capsys):
    code, out, _ = call(capsys, "reduce", FIXTURE, "--xi-prime", "1,2", "--format", "json")
    assert code == 0
    assert json.loads(out)["vertical_fiber"] == [[0, 0, -1, -1, -1], [0, 0, 0, -1, -1], [0, 0, 0, 0, -1]]
    code, out, err = call(capsys, "reduce", FIXTURE, "--xi-prime", "1,2,5")
    assert code == 2 and out == ""
    rec = json.loads(err)
    assert rec["error"] == "ExtensionError" and rec["kind"] == "domain"
    assert "E46" in rec["message"]


def test_exit_codes(capsys, tmp_path):
    code, _, err = call(capsys, "components", "-a", "sl", "-n", "4", "--xi", "3", "--components", "3,2;1,2")
    assert code == 2 and json.loads(err)["error"] == "ComponentError"
    code, _, _ = call(capsys, "roots", "-a", "sl")
    assert code == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{}", encoding="utf-8")
    code, _, err = call(capsys, "analyze-extension", str(bad))
    assert code == 1 and json.loads(err)["error"] == "SchemaError"
    code, _, _ = call(capsys, "analyze-extension", str(tmp_path / "missing.json"))
    assert code == 1
    code, _, _ = call(capsys, "roots", "-a", "F4", "-n", "4")
    assert code == 2
    code, _, _ = call(capsys, "roots", "-a", "sl", "-n", "3", "--xi", "1,x")
    assert code == 1


def test_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("PARASYM_FORMAT", "json")
    code, out, _ = call(capsys, "roots", "-a", "g2", "--xi", "1")
    assert code == 0 and json.loads(out.splitlines()[0])["module"] == "a1"


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.tex"
    code, out, _ = call(capsys, "symmetries", "-a", "g2", "--xi", "1", "--format", "latex", "-o", str(target))
    assert code == 0 and out == ""
    text = target.read_text(encoding="utf-8")
    assert text.count("\\\\") == 2


def test_lambda_full_small(capsys):
    code, out, _ = call(capsys, "lambda-full", "--max-rank", "3", "--max-xi", "2", "--max-subset", "1", "--families", "B", "--format", "json")
    assert code == 0
    rows = [json.loads(x) for x in out.splitlines()]
    assert {"algebra": "B3", "form": "R", "xi": ["1", "3"], "components": ["(a3,a2)"]} in [
        {k: r[k] for k in ("algebra", "form", "xi", "components")} for r in rows
    ]
