import json

import numpy as np
import pytest

from symprod import cli
from symprod.monodromy import roots_loop_generator


def write_lines(path, lines):
    path.write_text("".join(json.dumps(obj) + "\n" for obj in lines))


def test_dist_inline(capsys):
    assert cli.main(["dist", "--a", "1,5", "--b", "2,3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "distance = 3"
    assert out[1] == "engine = sorted"
    assert out[2] == "minimizer = 0,1"


def test_dist_same_class_is_zero(capsys):
    assert cli.main(["dist", "--a", "1,2", "--b", "2,1"]) == 0
    assert "distance = 0" in capsys.readouterr().out


def test_dist_engines_agree(capsys):
    values = {}
    for engine in ("brute", "sorted", "assignment"):
        assert cli.main(["dist", "--a", "1,5", "--b", "2,3", "--engine", engine]) == 0
        out = capsys.readouterr().out
        values[engine] = out.splitlines()[0]
        assert f"engine = {engine}" in out
    assert len(set(values.values())) == 1


def test_dist_complex_routes_to_assignment(capsys):
    assert cli.main(["dist", "--a", "1+2i,0", "--b", "0,1+2i"]) == 0
    out = capsys.readouterr().out
    assert "distance = 0" in out
    assert "engine = assignment" in out


def test_dist_twelve_significant_digits(capsys):
    assert cli.main(["dist", "--a", "0,0", "--b", "0.1,0.1"]) == 0
    assert "distance = 0.2" in capsys.readouterr().out


def test_dist_from_file(tmp_path, capsys):
    path = tmp_path / "pair.txt"
    path.write_text("1,5\n2,3\n")
    assert cli.main(["dist", "--file", str(path)]) == 0
    assert "distance = 3" in capsys.readouterr().out


def test_dist_input_errors(tmp_path, capsys):
    assert cli.main(["dist", "--a", "1,x", "--b", "2,3"]) == 2
    assert "cannot parse" in capsys.readouterr().err
    assert cli.main(["dist", "--a", "1,2"]) == 2
    assert cli.main(["dist", "--a", "1,2", "--b", "1,2,3"]) == 2
    path = tmp_path / "bad.txt"
    path.write_text("1,2\n")
    assert cli.main(["dist", "--file", str(path)]) == 2
    assert cli.main(["dist", "--file", str(tmp_path / "missing.txt")]) == 2


def test_canon(capsys):
    assert cli.main(["canon", "--t", "3,1,2"]) == 0
    assert capsys.readouterr().out.strip() == "1,2,3"
    assert cli.main(["canon", "--t", "1i,0"]) == 2


def test_lift_and_byte_identical_shuffle(tmp_path, capsys):
    rng = np.random.default_rng(0)
    samples = [rng.uniform(-5, 5, size=4).tolist() for _ in range(12)]
    plain = tmp_path / "field.jsonl"
    write_lines(
        plain,
        [{"point": [i / 12], "tuple": row} for i, row in enumerate(samples)],
    )
    shuffled = tmp_path / "shuffled.jsonl"
    write_lines(
        shuffled,
        [
            {"point": [i / 12], "tuple": [row[j] for j in rng.permutation(4)]}
            for i, row in enumerate(samples)
        ],
    )
    out1, out2 = tmp_path / "out1.jsonl", tmp_path / "out2.jsonl"
    assert cli.main(["lift", "--input", str(plain), "--output", str(out1)]) == 0
    err = capsys.readouterr().err
    assert "max_ratio = 1" in err
    assert cli.main(["lift", "--input", str(shuffled), "--output", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_lift_constant_field(tmp_path, capsys):
    path = tmp_path / "c.jsonl"
    write_lines(path, [{"point": [float(i)], "tuple": [2.0, -1.0]} for i in range(5)])
    out = tmp_path / "out.jsonl"
    assert cli.main(["lift", "--input", str(path), "--output", str(out)]) == 0
    lines = out.read_text().splitlines()
    tuples = [json.loads(line)["tuple"] for line in lines[1:]]
    assert tuples == [[-1.0, 2.0]] * 5  # identical sorted lines


def test_lift_refuses_complex(tmp_path, capsys):
    path = tmp_path / "loop.jsonl"
    write_lines(path, [{"point": [0.0], "tuple": [[1.0, 0.0], [0.0, 1.0]]}] * 2)
    assert cli.main(["lift", "--input", str(path), "--output", str(tmp_path / "o")]) == 2
    assert "holonomy" in capsys.readouterr().err


def test_lift_csv_input(tmp_path, capsys):
    path = tmp_path / "f.csv"
    path.write_text("point_0,tuple_0,tuple_1\n0.0,3.0,1.0\n1.0,1.5,2.5\n")
    out = tmp_path / "out.jsonl"
    assert cli.main(["lift", "--input", str(path), "--output", str(out)]) == 0
    assert json.loads(out.read_text().splitlines()[1])["tuple"] == [1.0, 3.0]


def test_holonomy_generated(capsys):
    assert cli.main(["holonomy", "--k", "2", "--steps", "256"]) == 0
    out = capsys.readouterr().out
    assert "cycle type = 2-cycle (0 1)" in out
    assert "steps = 256" in out
    assert cli.main(["holonomy", "--k", "3", "--steps", "512"]) == 0
    assert "3-cycle" in capsys.readouterr().out


def test_holonomy_from_file(tmp_path, capsys):
    from symprod.fieldfile import write_loop_file

    path = tmp_path / "loop.jsonl"
    write_loop_file(path, roots_loop_generator(2, 64))
    assert cli.main(["holonomy", "--input", str(path)]) == 0
    assert "2-cycle" in capsys.readouterr().out


def test_holonomy_constant_loop_identity(tmp_path, capsys):
    path = tmp_path / "const.jsonl"
    write_lines(path, [{"point": [0.0], "tuple": [[1.0, 0.0], [2.0, 0.0]]}] * 8)
    assert cli.main(["holonomy", "--input", str(path)]) == 0
    out = capsys.readouterr().out
    assert "cycle type = identity" in out
    assert "total cost = 0" in out


def test_holonomy_undersampled_exit_code(capsys):
    assert cli.main(["holonomy", "--k", "2", "--steps", "8"]) == 3
    assert "need at least 16" in capsys.readouterr().err


def test_holonomy_argument_validation(capsys):
    assert cli.main(["holonomy"]) == 2
    assert cli.main(["holonomy", "--k", "2"]) == 2


def test_lemmas_pass_table(capsys):
    assert cli.main(["lemmas", "--n", "2..3", "--trials", "15"]) == 0
    out = capsys.readouterr().out
    for name in (
        "displacement-bound",
        "exterior-openness",
        "interior-order-uniqueness",
        "boundary-has-ties",
        "stabilizer-minimality",
        "stabilizer-order",
        "diagonal-distance-closed-form",
    ):
        assert name in out
    assert "FAIL" not in out
    assert "all 14 checks passed (seed = 0)" in out


def test_lemmas_fault_injection_fails(capsys):
    assert (
        cli.main(
            [
                "lemmas",
                "--n",
                "2..3",
                "--trials",
                "15",
                "--inject-fault",
                "flip-displacement",
            ]
        )
        == 1
    )
    captured = capsys.readouterr()
    assert "FAIL" in captured.out
    assert "FAILED" in captured.err


def test_lemmas_seed_sources(capsys, monkeypatch):
    monkeypatch.setenv("SYMPROD_SEED", "7")
    assert cli.main(["lemmas", "--n", "2", "--trials", "10"]) == 0
    assert "(seed = 7)" in capsys.readouterr().out
    assert cli.main(["lemmas", "--n", "2", "--trials", "10", "--seed", "3"]) == 0
    assert "(seed = 3)" in capsys.readouterr().out
    monkeypatch.setenv("SYMPROD_SEED", "twelve")
    assert cli.main(["lemmas", "--n", "2", "--trials", "10"]) == 2


def test_lemmas_bad_n_range(capsys):
    assert cli.main(["lemmas", "--n", "abc"]) == 2
    assert cli.main(["lemmas", "--n", "1"]) == 2


def test_bench(capsys):
    assert cli.main(["bench", "--n", "2,5", "--reps", "2"]) == 0
    out = capsys.readouterr().out
    assert "cross-check ok" in out
    for engine in ("sorted", "assignment", "brute"):
        assert engine in out


def test_bench_skips_brute_above_cap(capsys):
    assert cli.main(["bench", "--n", "9", "--reps", "1"]) == 0
    out = capsys.readouterr().out
    assert "brute" not in out
    assert "cross-check" not in out


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc_info:
        cli.main(["frobnicate"])
    assert exc_info.value.code == 2


def test_parse_tuple_text():
    assert np.array_equal(cli.parse_tuple_text("1, 2,3"), [1.0, 2.0, 3.0])
    assert cli.parse_tuple_text("1+2i,0").dtype == np.complex128
    with pytest.raises(Exception):
        cli.parse_tuple_text("")
