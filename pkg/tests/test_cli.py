import csv
import io
import json

import pytest

from graphvc.cli import COMPUTE_COLUMNS, COMPUTE_SCHEMA, main
from graphvc.graph import read_edge_list


@pytest.fixture
def star_file(tmp_path):
    p = tmp_path / "star.txt"
    p.write_text("# star\n7 1\n7 2\n7 3\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_text(capsys, star_file):
    code, out, _ = run(capsys, "compute", star_file, "--witness", "--stats")
    assert code == 0
    lines = dict(line.split("=", 1) for line in out.splitlines())
    assert lines["vcdim"] == "2"
    assert len(lines["witness"].split()) == 2
    assert set(lines["witness"].split()) <= {"7", "1", "2", "3"}
    assert lines["n"] == "4" and lines["m"] == "3"


@pytest.mark.parametrize("flags", [[], ["--no-ball"], ["--no-reduce"], ["--order", "random", "--seed", "3"],
                                   ["--lb", "0"], ["--lb", "2"]])
def test_compute_flags(capsys, star_file, flags):
    code, out, _ = run(capsys, "compute", star_file, *flags)
    assert code == 0 and out.splitlines()[0] == "vcdim=2"


def test_compute_csv(capsys, star_file):
    code, out, _ = run(capsys, "compute", star_file, "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == COMPUTE_SCHEMA
    rows = list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))
    assert list(rows[0]) == COMPUTE_COLUMNS
    assert rows[0]["vcdim"] == "2" and rows[0]["n"] == "4"


def test_bounds(capsys, star_file):
    code, out, _ = run(capsys, "bounds", star_file, "--format", "csv")
    assert code == 0
    row = list(csv.DictReader(io.StringIO(out)))[0]
    assert row["log_n"] == "2" and row["best"] == "2"


def test_lowerbound(capsys, star_file):
    code, out, _ = run(capsys, "lowerbound", star_file, "--witness")
    assert code == 0 and out.startswith("lb=")


def test_generate_roundtrip(capsys, tmp_path):
    target = tmp_path / "g.txt"
    assert main(["generate", "grid", "--side", "3", "-o", str(target)]) == 0
    assert read_edge_list(target).edge_count == 12
    code, out, _ = run(capsys, "generate", "gnp", "--n", "10", "--p", "1")
    assert code == 0 and len(out.splitlines()) == 45
    code, out, _ = run(capsys, "generate", "powerlaw", "--n", "50", "--beta", "2.5", "--seed", "2")
    assert code == 0 and out


def test_reduce_with_map(capsys, tmp_path, star_file):
    mp = tmp_path / "map.txt"
    code, out, err = run(capsys, "reduce", star_file, "--lb", "2", "--map", str(mp))
    assert code == 0 and out == "" and "kept 1 of 4" in err
    assert mp.read_text().splitlines() == ["# new_id original_label", "0 7"]


def test_hardness_roles(capsys, tmp_path):
    host = tmp_path / "tri.txt"
    host.write_text("0 1\n1 2\n0 2\n")
    roles = tmp_path / "roles.jsonl"
    out = tmp_path / "h.txt"
    assert main(["hardness", str(host), "--k", "3", "-o", str(out), "--roles", str(roles)]) == 0
    rows = [json.loads(line) for line in roles.read_text().splitlines()]
    assert [r["id"] for r in rows] == list(range(len(rows)))
    assert len(rows) >= read_edge_list(out).n
    assert {r["role"] for r in rows} == {"X", "R0", "R1", "R2", "R3"}
    code, text, _ = run(capsys, "compute", str(out))
    assert code == 0 and int(text.split("=")[1]) >= 3


def test_oracle(capsys, star_file):
    code, out, _ = run(capsys, "oracle", star_file, "--vcdim", "--shattered", "1,2", "--enumerate", "3",
                       "--matching")
    assert code == 0
    assert out.splitlines() == ["vcdim=2", "shattered=true", "shattered_sets=6", "matching_number=1"]


def test_oracle_hidden_from_help(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    assert "oracle" not in capsys.readouterr().out


def test_exit_codes(capsys, tmp_path, star_file):
    assert run(capsys, "compute", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\nx y\n")
    code, _, err = run(capsys, "compute", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "compute", star_file, "--bogus")[0] == 1
    assert run(capsys)[0] == 1
    assert run(capsys, "compute", star_file, "--lb", "3")[0] == 2
    assert run(capsys, "oracle", star_file, "--shattered", "99")[0] == 2
    assert run(capsys, "oracle", star_file, "--enumerate", "3", "--budget", "1")[0] == 2
    big = tmp_path / "big.txt"
    big.write_text("".join(f"{i} {i + 1}\n" for i in range(20)))
    assert run(capsys, "oracle", str(big), "--vcdim")[0] == 3
    small = tmp_path / "p.txt"
    small.write_text("0 1\n")
    assert run(capsys, "hardness", str(small), "--k", "5")[0] == 2


def test_sweep_cli(capsys, tmp_path):
    out = tmp_path / "s.csv"
    code = main(["sweep", "--model", "gnp", "--n", "8", "--param", "0,1", "--samples", "2", "-o", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "# graphvc-sweep v1"
    means = [r for r in csv.DictReader(io.StringIO("\n".join(lines[1:]))) if r["seed"] == "mean"]
    assert [float(r["vcdim"]) for r in means] == [1.0, 0.0]
