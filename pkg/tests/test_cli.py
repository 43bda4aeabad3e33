import json

import pytest

from sl3ktypes import cli
from sl3ktypes.orbits import Orbit, orbit_table
from sl3ktypes.positive import RegionPoint, in_C
from sl3ktypes.regions_svg import MARGIN, render_regions_svg


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mult_closed_golden_tsv(capsys):
    code, out, _ = run(capsys, "mult", "--a", "2", "--b", "4",
                       "--orbit", "closed", "--lambda-max", "13",
                       "--method", "positive")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "lambda\tmult"
    values = [int(line.split("\t")[1]) for line in lines[1:]]
    assert values == [0] * 9 + [1, 1, 2, 2, 3]


def test_mult_all_methods_agree(capsys):
    code, out, _ = run(capsys, "mult", "--a", "1", "--b", "1",
                       "--orbit", "open", "--lambda-max", "2",
                       "--method", "all")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "lambda\tpositive\tlocalization\ttseries\toracle\tagree"
    rows = [line.split("\t") for line in lines[1:]]
    assert [row[1] for row in rows] == ["0", "1", "1"]
    assert all(row[-1] == "1" for row in rows)


def test_mult_oracle_trivial(capsys):
    code, out, _ = run(capsys, "mult", "--a", "0", "--b", "0",
                       "--orbit", "open", "--lambda-max", "0",
                       "--method", "oracle")
    assert code == 0
    assert out.strip().split("\n")[1] == "0\t1"


def test_mult_json_round_trips(capsys):
    code, out, _ = run(capsys, "mult", "--a", "2", "--b", "4",
                       "--orbit", "o1", "--lambda-max", "10",
                       "--method", "localization", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["orbit"] == "o1" and obj["method"] == "localization"
    assert {"lambda": 8, "mult": 3} in obj["mults"]
    assert cli.dump_json(obj) == out


def test_mult_json_all_round_trips(capsys):
    code, out, _ = run(capsys, "mult", "--a", "2", "--b", "4",
                       "--orbit", "closed", "--lambda-max", "12",
                       "--method", "all", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["method"] == "all"
    assert all(row["agree"] for row in obj["mults"])
    assert cli.dump_json(obj) == out


def test_mult_invalid_method_orbit_combo(capsys):
    code, _, err = run(capsys, "mult", "--a", "1", "--b", "1",
                       "--orbit", "closed", "--lambda-max", "3",
                       "--method", "oracle")
    assert code == 2
    assert "oracle" in err
    code, _, _ = run(capsys, "mult", "--a", "1", "--b", "1",
                     "--orbit", "open", "--lambda-max", "3",
                     "--method", "blattner")
    assert code == 2


def test_mult_rejects_unknown_orbit(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["mult", "--a", "1", "--b", "1", "--orbit", "nope",
                  "--lambda-max", "3"])
    assert exc.value.code == 2


def test_lambda_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv(cli.CAP_ENV_VAR, "5")
    code, _, err = run(capsys, "mult", "--a", "0", "--b", "0",
                       "--orbit", "open", "--lambda-max", "6",
                       "--method", "positive")
    assert code == 2 and "cap" in err
    code, _, _ = run(capsys, "mult", "--a", "0", "--b", "0",
                     "--orbit", "open", "--lambda-max", "5",
                     "--method", "positive")
    assert code == 0


def test_mult_out_file(capsys, tmp_path):
    path = tmp_path / "table.tsv"
    code, out, _ = run(capsys, "mult", "--a", "0", "--b", "0",
                       "--orbit", "closed", "--lambda-max", "4",
                       "--method", "blattner", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().splitlines()[0] == "lambda\tmult"


def test_crosscheck_small(capsys):
    code, out, _ = run(capsys, "crosscheck", "--a-max", "0", "--b-max", "0",
                       "--lambda-max", "10")
    assert code == 0
    assert "44 orbit-lambda cells" in out
    assert "all agree" in out


def test_crosscheck_fault_injection(capsys):
    import io
    buf = io.StringIO()
    corrupt = lambda orbit, a, b: orbit_table(orbit, a, b + 1)
    code = cli.crosscheck(0, 0, 10, table_fn=corrupt, out=buf)
    assert code == 3
    assert "counterexample" in buf.getvalue()


def test_regions_svg_element_counts(tmp_path, capsys):
    a, b, n_max = 2, 4, 8
    path = tmp_path / "regions.svg"
    code, _, _ = run(capsys, "regions", "--a", str(a), "--b", str(b),
                     "--n-max", str(n_max), "--out", str(path))
    assert code == 0
    svg = path.read_text()
    grid = [(c, d) for c in range(n_max + 1) for d in range(n_max + 1)]
    n_in = sum(1 for c, d in grid if in_C(RegionPoint(c, d), a, b))
    assert svg.count("<circle") == n_in
    assert svg.count('class="excluded"') == len(grid) - n_in
    assert svg.count('class="boundary"') == 2
    assert svg.count('class="count"') == n_max + 1


def test_regions_degenerate_cases():
    svg = render_regions_svg(0, 0, 10)
    # only (0, 0) lies in the full-flag region
    assert svg.count("full_flag") == 1
    svg = render_regions_svg(1, 1, 10)
    # a odd excludes the whole c = 0 column
    assert f'cx="{MARGIN}"' not in svg


def test_regions_bad_path(capsys):
    code, _, err = run(capsys, "regions", "--a", "1", "--b", "1",
                       "--n-max", "3", "--out", "/nonexistent-dir/x.svg")
    assert code == 2
    assert "/nonexistent-dir/x.svg" in err


def test_deterministic_output(capsys):
    args = ["mult", "--a", "3", "--b", "2", "--orbit", "o2",
            "--lambda-max", "12", "--method", "all", "--format", "json"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
