import json
import subprocess
import sys

import pytest

from maxblank import FiniteChain, MaxPlus, SolutionRegion, Vector, contains, enumerate_solutions, solve
from maxblank.cli import load_system, main
from maxblank.oracle import build_grid, iter_carrier_vectors

SINGLE = {"algebra": "max-plus", "A": [["inf"]], "w": ["inf"]}
CHAIN = {"algebra": "chain-min:3", "A": [["3", "1"], ["2", "2"]], "w": ["2", "2"]}


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="system.json"):
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_single_entry(write, capsys):
    code, out, _ = run(capsys, "solve", write(SINGLE))
    report = json.loads(out)
    assert code == 0
    assert report["members"] == [{"lower": ["-inf"], "upper": ["inf"], "lowerExcluded": [1], "upperExcluded": []}]
    assert report["greatest"] == ["inf"]
    assert report["canonical"] is True
    assert set(report["stats"]) >= {"choiceFunctions", "explored", "pruned", "wallTimeSeconds"}


def test_solve_singleton(write, capsys):
    code, out, _ = run(capsys, "solve", write({"algebra": "max-plus", "A": [["0"]], "w": ["5"]}))
    assert code == 0
    assert json.loads(out)["members"] == [{"lower": ["5"], "upper": ["5"], "lowerExcluded": [], "upperExcluded": []}]


def test_solve_chain_agrees_with_oracle(write, capsys):
    path = write(CHAIN)
    code, out, _ = run(capsys, "solve", "--deterministic", path)
    assert code == 0
    members = json.loads(out)["members"]
    assert members == [{"lower": ["2", "0"], "upper": ["2", "3"], "lowerExcluded": [], "upperExcluded": []}]
    code, out, _ = run(capsys, "oracle", path)
    assert code == 0 and json.loads(out)["agree"] is True


def test_empty_region_is_success(write, capsys):
    code, out, _ = run(capsys, "solve", write({"algebra": "max-plus", "A": [["0"], ["0"]], "w": ["1", "2"]}))
    assert code == 0 and json.loads(out)["members"] == [] and json.loads(out)["greatest"] is None


def test_deterministic_output_is_byte_identical(write, capsys):
    path = write(CHAIN)
    outs = {run(capsys, "solve", "--deterministic", path)[1] for _ in range(3)}
    outs.add(run(capsys, "solve", "--deterministic", "--threads", "3", path)[1])
    assert len(outs) == 1
    assert "stats" not in json.loads(outs.pop())


def test_raw_flag(write, capsys):
    path = write({"algebra": "max-min", "A": [["1", "1"], ["1", "1"]], "w": ["1", "1"]})
    raw = json.loads(run(capsys, "solve", "--raw", "--deterministic", path)[1])
    canon = json.loads(run(capsys, "solve", "--deterministic", path)[1])
    assert raw["canonical"] is False and len(raw["members"]) == 4
    assert len(canon["members"]) == 2


def test_algebra_override(write, capsys):
    path = write({"algebra": "max-plus", "A": [["1"]], "w": ["1"]})
    report = json.loads(run(capsys, "solve", "--algebra", "bool", "--deterministic", path)[1])
    assert report["algebra"] == "bool"
    assert report["members"] == [{"lower": ["1"], "upper": ["1"], "lowerExcluded": [], "upperExcluded": []}]


def test_round_trip_members(write, capsys):
    path = write({"algebra": "max-plus", "A": [["inf", "0"], ["1", "-2"]], "w": ["inf", "3"]})
    report = json.loads(run(capsys, "solve", "--deterministic", path)[1])
    alg, A, w = load_system(report)
    region = SolutionRegion.from_list(alg, A.shape[1], report["members"])
    direct = solve(A, w)
    assert region == direct
    for v in build_grid(A, w):
        assert (v in region) == (v in direct)


def test_check_single_entry(write, capsys):
    path = write(SINGLE)
    code, out, _ = run(capsys, "check", path, '["-inf"]')
    assert code == 0
    assert "satisfies Av=w: false" in out and "contained in computed region: false" in out
    code, out, _ = run(capsys, "check", path, '["inf"]')
    assert code == 0
    assert "satisfies Av=w: true" in out and "contained in computed region: true" in out
    code, out, _ = run(capsys, "check", path, "7/2")
    assert code == 0 and "true" in out


def test_check_dimension_mismatch(write, capsys):
    code, _, err = run(capsys, "check", write(SINGLE), '["1", "2"]')
    assert code == 3 and "error" in err


def test_oracle_exit_codes(write, capsys):
    code, out, _ = run(capsys, "oracle", write({"algebra": "bool", "A": [["0"]], "w": ["1"]}))
    report = json.loads(out)
    assert code == 0 and report["agree"] and report["solutions"] == 0 and report["members"] == 0
    code, _, _ = run(capsys, "oracle", write(SINGLE))
    assert code == 6


def test_oracle_powerset_structure(write, capsys):
    code, out, _ = run(capsys, "oracle", write({"algebra": "powerset:2", "A": [["{a,b}"]], "w": ["{a}"]}))
    report = json.loads(out)
    assert code == 0 and report["structure"] == "pass" and report["terminal"] == ["{a}"]
    code, _, _ = run(capsys, "solve", write({"algebra": "powerset:2", "A": [["{a,b}"]], "w": ["{a}"]}))
    assert code == 3


@pytest.mark.parametrize(
    "doc",
    [
        "not json",
        "[1, 2]",
        {"A": [["1"]], "w": ["1"]},
        {"algebra": "min-plus", "A": [["1"]], "w": ["1"]},
        {"algebra": "max-plus", "A": [], "w": []},
        {"algebra": "max-plus", "A": [[]], "w": ["1"]},
        {"algebra": "max-plus", "A": [["x"]], "w": ["1"]},
        {"algebra": "chain-min:3", "A": [["4"]], "w": ["1"]},
        {"algebra": "max-plus", "A": "nope", "w": ["1"]},
        {"algebra": "max-plus", "A": [[None]], "w": ["1"]},
    ],
)
def test_parse_errors_exit_2(write, capsys, doc):
    code, _, err = run(capsys, "solve", write(doc))
    assert code == 2 and err.startswith("error:")


def test_missing_file_exit_2(tmp_path, capsys):
    assert run(capsys, "solve", str(tmp_path / "absent.json"))[0] == 2


@pytest.mark.parametrize(
    "doc",
    [
        {"algebra": "max-plus", "A": [["1", "2"], ["3"]], "w": ["1", "2"]},
        {"algebra": "max-plus", "A": [["1"]], "w": ["1", "2"]},
    ],
)
def test_dimension_errors_exit_3(write, capsys, doc):
    assert run(capsys, "solve", write(doc))[0] == 3


def test_budget_exit_4(write, capsys):
    doc = {"algebra": "max-min", "A": [["1", "1", "1"]] * 3, "w": ["1", "1", "1"]}
    assert run(capsys, "solve", "--budget", "5", write(doc))[0] == 4


def test_bench(write, capsys):
    code, out, _ = run(capsys, "bench", "--repeat", "3", write(CHAIN))
    report = json.loads(out)
    assert code == 0 and report["repeat"] == 3 and report["minSeconds"] <= report["maxSeconds"]


def test_module_entry_point(write):
    proc = subprocess.run(
        [sys.executable, "-m", "maxblank", "solve", "--deterministic", write(SINGLE)],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["members"][0]["lowerExcluded"] == [1]


def test_oracle_full_grid_agrees_for_chain_file(write, capsys):
    # the oracle subcommand walks every carrier vector; repeat the walk here
    alg, A, w = load_system(CHAIN)
    region, truth = solve(A, w), enumerate_solutions(A, w)
    assert all((v in region) == (v in truth) for v in iter_carrier_vectors(alg, 2))
    assert alg == FiniteChain(3) and MaxPlus() != alg
    assert contains(region.members[0], Vector(alg, [2, 3]))
