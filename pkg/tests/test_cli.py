import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest
from referencing import Registry, Resource

from friendship_hg import hgio
from friendship_hg.cli import run

GOLDEN = Path(__file__).parent / "golden"


def _registry():
    reg = Registry()
    for f in resources.files("friendship_hg.schemas").iterdir():
        if f.name.endswith(".json"):
            reg = reg.with_resource(f.name, Resource.from_contents(json.loads(f.read_text())))
    return reg


REGISTRY = _registry()


def validate(doc, schema):
    contents = REGISTRY[schema].contents
    jsonschema.Draft202012Validator(contents, registry=REGISTRY).validate(doc)


def cli(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def cli_json(capsys, *argv):
    code, out, err = cli(capsys, *argv, "--format", "json")
    return code, json.loads(out), out


@pytest.fixture
def files(tmp_path, capsys):
    paths = {}
    for name, argv in {
        "cube3": ["construct", "cube", "--k", "3"],
        "fano_u": ["construct", "universal", "--sts", "7"],
        "trunc": ["construct", "truncated", "--r", "4"],
    }.items():
        p = tmp_path / f"{name}.hg"
        assert run(argv + ["-o", str(p)]) == 0
        paths[name] = p
    p = tmp_path / "fano.hg"
    assert run(["steiner", "sts", "--n", "7", "-o", str(p)]) == 0
    paths["fano"] = p
    broken = tmp_path / "broken.hg"
    lines = paths["cube3"].read_text().splitlines()
    broken.write_text("8 3 31\n" + "\n".join(lines[2:]) + "\n")
    paths["broken"] = broken
    bad = tmp_path / "bad.hg"
    bad.write_text("8 3 2\n0 1\n")
    paths["malformed"] = bad
    capsys.readouterr()
    return paths


def test_construct_writes_canonical_file(files):
    h, t = hgio.read(files["cube3"])
    assert (h.n, h.r, h.m) == (8, 3, 32) and t is None
    assert len(files["cube3"].read_text().splitlines()) == 33


def test_construct_json(capsys, tmp_path):
    code, doc, _ = cli_json(capsys, "construct", "truncated", "--r", "4", "-o", tmp_path / "t.hg", "--recipe", tmp_path / "r.json")
    assert code == 0
    validate(doc, "construct.schema.json")
    assert doc["edges"] == 90 and doc["cliques"] == 18
    assert json.loads((tmp_path / "r.json").read_text()) == doc["recipe"]
    assert doc["sha256"] == hgio.sha256_hex((tmp_path / "t.hg").read_bytes())


def test_construct_inline_hg(capsys):
    code, doc, _ = cli_json(capsys, "construct", "complete", "--r", "3")
    assert code == 0 and doc["hg"] == "4 3 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n"


def test_construct_universal_from_file(capsys, files, tmp_path):
    out = tmp_path / "u.hg"
    code, doc, _ = cli_json(capsys, "construct", "universal", "--steiner", files["fano"], "-o", out)
    assert code == 0 and doc["edges"] == 28
    assert out.read_bytes() == files["fano_u"].read_bytes()


def test_construct_truncated_r3_unavailable(capsys):
    code, _, err = cli(capsys, "construct", "truncated", "--r", "3")
    assert code == 2 and "S(4,5,10)" in err


def test_steiner_json(capsys):
    code, doc, _ = cli_json(capsys, "steiner", "s5612")
    assert code == 0
    validate(doc, "steiner.schema.json")
    assert doc["blocks"] == 132 and doc["verification"]["verdict"] == "PASS"
    assert doc["hg"].splitlines()[1] == "# steiner t=5"


@pytest.mark.parametrize(
    "prop, name, code",
    [
        ("friendship", "cube3", 0),
        ("friendship", "broken", 1),
        ("friendship", "malformed", 2),
        ("universal", "fano_u", 0),
        ("universal", "cube3", 1),
        ("universal", "malformed", 2),
        ("steiner", "fano", 0),
        ("steiner", "cube3", 2),
        ("steiner", "malformed", 2),
    ],
)
def test_verify_exit_codes(capsys, files, prop, name, code):
    got, out, err = cli(capsys, "verify", prop, files[name], "--format", "json")
    assert got == code
    if code == 2 and name == "malformed":
        assert out == "" and "declares" in err
    elif code == 2:
        assert out == "" and "--t" in err
    else:
        doc = json.loads(out)
        validate(doc, "certificate.schema.json")
        assert doc["input_sha256"] == hgio.sha256_hex(files[name].read_bytes())


def test_verify_steiner_with_t(capsys, files):
    code, doc, _ = cli_json(capsys, "verify", "steiner", files["cube3"], "--t", "2")
    assert code == 1 and doc["verdict"] == "FAIL"


def test_verify_saturated(capsys, tmp_path):
    star = tmp_path / "star.hg"
    star.write_text("5 2 4\n0 1\n0 2\n0 3\n0 4\n")
    assert cli_json(capsys, "verify", "saturated", star, "--l", "1")[0] == 0
    assert cli_json(capsys, "verify", "saturated", star, "--l", "2")[0] == 1
    assert cli(capsys, "verify", "saturated", star)[0] == 2


def test_verify_too_small_is_error(capsys, tmp_path):
    p = tmp_path / "tiny.hg"
    p.write_text("3 3 0\n")
    code, doc, _ = cli_json(capsys, "verify", "friendship", p)
    assert code == 2 and doc["verdict"] == "ERROR"


def test_missing_file(capsys, tmp_path):
    code, _, err = cli(capsys, "verify", "friendship", tmp_path / "nope.hg")
    assert code == 2 and "cannot read" in err


def test_decompose(capsys, files, tmp_path):
    out = tmp_path / "d.hg"
    code, doc, _ = cli_json(capsys, "decompose", files["fano_u"], "-o", out)
    assert code == 0
    validate(doc, "certificate.schema.json")
    assert len(doc["cliques"]) == 7
    assert hgio.read(out)[0].r == 4
    code, doc, _ = cli_json(capsys, "decompose", files["broken"])
    assert code == 1 and "completions" in doc["witness"]
    assert cli(capsys, "decompose", files["malformed"])[0] == 2


def test_analyze(capsys, files):
    code, doc, _ = cli_json(capsys, "analyze", files["trunc"])
    assert code == 0
    validate(doc, "analyze.schema.json")
    assert doc["audit"]["upper_decomp"] == "462/25"
    assert doc["audit"]["verdicts"]["upper_decomp"]["tight"]
    assert doc["shadow"]["stats"]["bound"] == 6
    code, doc, _ = cli_json(capsys, "analyze", files["fano_u"])
    assert doc["sociable"]["star_center"] == 7 and doc["audit"]["universal"]
    code, doc, _ = cli_json(capsys, "analyze", files["broken"])
    assert code == 1
    validate(doc, "analyze.schema.json")
    assert cli(capsys, "analyze", files["malformed"])[0] == 2


def test_analyze_text(capsys, files):
    code, out, _ = cli(capsys, "analyze", files["cube3"])
    assert code == 0 and "universal=False" in out


def test_bounds(capsys):
    code, doc, _ = cli_json(capsys, "bounds", "--r", "3", "--n-from", "8", "--n-to", "16")
    assert code == 0
    validate(doc, "bounds.schema.json")
    assert [row["n"] for row in doc["rows"]] == list(range(8, 17))
    assert doc["rows"][0]["lrss_upper"] == "40"
    code, doc, _ = cli_json(capsys, "bounds", "--r", "4", "--n", "9")
    assert doc["rows"][0]["upper_decomp"] == "462/25"
    assert cli(capsys, "bounds", "--r", "3")[0] == 2
    assert cli(capsys, "bounds", "--r", "2", "--n", "5")[0] == 2
    assert cli(capsys, "bounds", "--r", "3", "--n-from", "9", "--n-to", "8")[0] == 2


def test_search(capsys, tmp_path):
    code, doc, _ = cli_json(capsys, "search", "--n", "8", "--max-solutions", "1", "--out-dir", tmp_path)
    assert code == 0
    validate(doc, "search.schema.json")
    assert doc["solution_count"] == 1 and not doc["exhausted"]
    h, _ = hgio.read(tmp_path / "solution_0000.hg")
    assert hgio.content_hash(h) == doc["solutions"][0]["sha256"]
    code, doc, _ = cli_json(capsys, "search", "--n", "6")
    assert doc["exhausted"] and doc["solution_count"] == 0
    assert cli(capsys, "search", "--n", "11")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["lemma-lab", "path", "--n-max", "6"],
        ["lemma-lab", "complement", "--r-max", "5"],
        ["lemma-lab", "saturation", "--k", "2", "--l", "2", "--n-max", "6"],
    ],
)
def test_lemma_lab(capsys, argv):
    code, doc, _ = cli_json(capsys, *argv)
    assert code == 0
    validate(doc, "certificate.schema.json")


def test_lemma_lab_range_error(capsys):
    assert cli(capsys, "lemma-lab", "path", "--n-max", "9")[0] == 2
    assert cli(capsys, "lemma-lab", "saturation", "--k", "3", "--l", "3", "--n-max", "5")[0] == 2


def test_bad_jobs(capsys):
    assert cli(capsys, "bounds", "--r", "3", "--n", "8", "--jobs", "0")[0] == 2


def test_usage_errors_exit_2():
    for argv in (["nonsense"], ["verify", "friendship"], ["construct", "cube", "--k", "x"]):
        p = subprocess.run([sys.executable, "-m", "friendship_hg.cli", *argv], capture_output=True, text=True)
        assert p.returncode == 2


def test_entry_point_runs(files):
    p = subprocess.run(
        [sys.executable, "-m", "friendship_hg.cli", "verify", "friendship", str(files["cube3"])],
        capture_output=True,
        text=True,
    )
    assert p.returncode == 0 and p.stdout.startswith("friendship: PASS")


def test_round_trip_through_cli(capsys, files, tmp_path):
    h, _ = hgio.read(files["trunc"])
    again = tmp_path / "again.hg"
    hgio.write(again, h)
    assert again.read_bytes() == files["trunc"].read_bytes()


def test_jobs_env_default(monkeypatch, capsys, files):
    monkeypatch.setenv("FRIENDSHIP_HG_JOBS", "3")
    code, doc, _ = cli_json(capsys, "verify", "friendship", files["cube3"])
    assert code == 0 and doc["verdict"] == "PASS"


DETERMINISM = [
    ["construct", "truncated", "--r", "4"],
    ["construct", "universal", "--sqs8"],
    ["steiner", "sts", "--n", "13"],
    ["verify", "friendship", "{cube3}"],
    ["verify", "friendship", "{broken}"],
    ["verify", "universal", "{fano_u}"],
    ["verify", "steiner", "{fano}"],
    ["decompose", "{trunc}"],
    ["analyze", "{trunc}"],
    ["bounds", "--r", "3", "--n-from", "4", "--n-to", "20"],
    ["search", "--n", "8", "--max-solutions", "3"],
    ["search", "--n", "7"],
    ["search", "--n", "8", "--node-budget", "500", "--no-symmetry"],
    ["lemma-lab", "complement", "--r-max", "4"],
    ["lemma-lab", "path", "--n-max", "5"],
]


@pytest.mark.parametrize("argv", DETERMINISM, ids=lambda a: " ".join(a[:2]))
def test_byte_identical_json(capsys, files, argv):
    argv = [a.format(**{k: str(v) for k, v in files.items()}) for a in argv]
    outputs = set()
    for jobs in ("1", "1", "4"):
        run(argv + ["--format", "json", "--jobs", jobs])
        outputs.add(capsys.readouterr().out)
    assert len(outputs) == 1


GOLDEN_CASES = {
    "search_n8_first.json": ["search", "--n", "8", "--max-solutions", "1"],
    "bounds_r4_n9.json": ["bounds", "--r", "4", "--n", "9"],
    "steiner_sqs8.json": ["steiner", "sqs8"],
    "construct_cube3.json": ["construct", "cube", "--k", "3"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(capsys, name):
    run(GOLDEN_CASES[name] + ["--format", "json"])
    assert capsys.readouterr().out == (GOLDEN / name).read_text()
