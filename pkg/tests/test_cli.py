import csv
import io
import json
import random
import subprocess
import sys
from itertools import product

import pytest

from octobelt.apparatus import GENERATOR_NAMES, default_convention
from octobelt.cdtower import build_table
from octobelt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_csv_dim8(capsys):
    code, out, _ = run(capsys, "table", "--dim", "8", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    header = rows[0]
    assert header == ["", "1", "i", "j", "k", "L", "Li", "Lj", "Lk"]
    cells = {(r[0], header[c]): r[c] for r in rows[1:] for c in range(1, 9)}
    assert cells["Li", "Lj"] == "-k"
    assert cells["i", "Lj"] == "-Lk"
    assert cells["L", "L"] == "-1"


def test_table_json_dim4(capsys):
    code, out, _ = run(capsys, "table", "--dim", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and set(doc) == {"dim", "basis", "table"}
    assert doc["dim"] == 4 and doc["basis"] == ["1", "i", "j", "k"]
    assert doc["table"][1][2] == "k"


def test_table_text_dim4(capsys):
    code, out, _ = run(capsys, "table", "--dim", "4")
    assert code == 0
    row_i = [line for line in out.splitlines() if line.strip().startswith("i |")][0]
    assert row_i.split("|")[1].split() == ["i", "-1", "k", "-j"]


def test_table_dim16_matches_tower(capsys):
    code, out, _ = run(capsys, "table", "--dim", "16", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["table"]) == 16 and all(len(r) == 16 for r in doc["table"])
    names = doc["basis"]
    for r, c in product(range(16), repeat=2):
        sign, idx = build_table(16)[r][c]
        assert doc["table"][r][c] == ("-" if sign < 0 else "") + names[idx]


def test_table_bad_dim(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--dim", "5"])
    assert exc.value.code != 0
    assert "invalid choice" in capsys.readouterr().err


@pytest.mark.parametrize("fmt", ["text", "csv", "json"])
def test_table_byte_stable_and_out_file(capsys, tmp_path, fmt):
    _, first, _ = run(capsys, "table", "--format", fmt)
    _, second, _ = run(capsys, "table", "--format", fmt)
    assert first == second
    path = tmp_path / f"t.{fmt}"
    code, out, _ = run(capsys, "table", "--format", fmt, "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_bytes() == first.encode()


@pytest.mark.parametrize(
    "src, want",
    [
        ("(L*j)*k", "-Li"),
        ("L*(j*k)", "Li"),
        ("j*(L*i)", "Lk"),
        ("0", "0"),
        ("i*j*k", "-1"),
        ("conj(1 + 2*i)", "1 - 2i"),
        ("1/2 + 2*Lk - k", "1/2 - k + 2Lk"),
    ],
)
def test_eval(capsys, src, want):
    code, out, _ = run(capsys, "eval", src)
    assert code == 0 and out == want + "\n"


def test_eval_errors(capsys):
    code, out, err = run(capsys, "eval", "i*j*k", "--strict-parens")
    assert code != 0 and out == "" and "position 3" in err
    code, _, err = run(capsys, "eval", "i**j")
    assert code != 0 and "position 2" in err


def test_word(capsys):
    assert run(capsys, "word", "i", "j")[1] == "k\n"
    assert run(capsys, "word")[1] == "1\n"
    code, out, _ = run(capsys, "word", "Lj", "k", "--trace")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "-Li"
    assert len(lines) == 4 and all(line.startswith("step ") for line in lines[:3])
    assert lines[2] == "step 2: k -> flag=right dir=down face=black twist=1 elem=-Li"


def test_word_unknown_generator(capsys):
    code, out, err = run(capsys, "word", "i", "m")
    assert code != 0 and out == "" and "unknown generator" in err


def test_eval_agrees_with_word(capsys):
    rng = random.Random(17)
    for _ in range(60):
        w = [rng.choice(GENERATOR_NAMES) for _ in range(rng.randint(1, 10))]
        _, via_word, _ = run(capsys, "word", *w)
        _, via_eval, _ = run(capsys, "eval", "*".join(w))
        assert via_word == via_eval


def test_verify_default(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "112/112 state-generator pairs" in out
    assert "137256/137256 apparatus words (lengths 1..6)" in out
    assert out.rstrip().endswith("all suites passed")


def test_verify_short_words(capsys):
    code, out, _ = run(capsys, "verify", "--max-word-len", "2", "--seed", "3")
    assert code == 0 and "56/56 apparatus words (lengths 1..2)" in out and out.startswith("seed 3\n")


def test_verify_bad_max_len(capsys):
    code, _, err = run(capsys, "verify", "--max-word-len", "0")
    assert code != 0 and "max-word-len" in err


def test_verify_corrupted_convention(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(default_convention().with_flipped("k", 0).to_json())
    code, out, err = run(capsys, "verify", "--convention", str(path))
    assert code != 0
    assert "generator k" in err and "elem=1" in err
    assert "FAIL 110/112 state-generator pairs" in out


def test_verify_unreadable_convention(capsys, tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{}")
    code, _, err = run(capsys, "verify", "--convention", str(path))
    assert code != 0 and "convention" in err


def _associator_count_oracle():
    """Count via signed-index bookkeeping on the doubling table (no octonion objects)."""
    t = build_table(8)
    count = 0
    for x, y, z in product(range(1, 8), repeat=3):
        s1, xy = t[x][y]
        s2, left = t[xy][z]
        s3, yz = t[y][z]
        s4, right = t[x][yz]
        if (s1 * s2, left) != (s3 * s4, right):
            count += 1
    return count


def test_witness_associator(capsys):
    code, out, _ = run(capsys, "witness", "associator")
    lines = out.splitlines()
    assert code == 0
    assert "(L, j, k) -> -2Li" in lines
    assert not any(line.startswith("(i, j, k)") for line in lines)
    assert _associator_count_oracle() == 168
    assert lines[-1].startswith("total: 168 of 343")
    assert len(lines) == 169


def test_witness_zero_divisor(capsys):
    code, out, _ = run(capsys, "witness", "zero-divisor")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("x = ") and lines[1].startswith("y = ")
    assert lines[2] == "x*y = 0"


def test_solve_encoding(capsys):
    code, out, _ = run(capsys, "solve-encoding")
    assert code == 0
    assert "convention 0 [default, shipped]" in out
    assert "consistent conventions: 1" in out


def test_solve_encoding_override(capsys):
    code, out, _ = run(capsys, "solve-encoding", "--predicate-override", "lj=always")
    assert code == 0
    assert "Lj: black_arrowhead XOR flag_right (overridden)" in out
    assert "shipped convention is NOT consistent" in out
    code, _, err = run(capsys, "solve-encoding", "--predicate-override", "lj")
    assert code != 0 and "GEN=always|never" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "octobelt", "word", "j", "i"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "-k\n"
