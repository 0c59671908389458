"""End-to-end runs of the glyphorder command line."""

import json
import shutil

import pytest

from glyphorder.cli import DATA_ENV_VAR, main
from glyphorder.ingest import parse_order, parse_order_csv

from conftest import DATA_DIR


@pytest.fixture(autouse=True)
def isolate_env(monkeypatch):
    monkeypatch.delenv(DATA_ENV_VAR, raising=False)


def run(*argv):
    return main([str(a) for a in argv])


def test_order_writes_the_full_bundle(tmp_path, capsys):
    assert run("order", "--out", tmp_path) == 0
    names = {p.name for p in tmp_path.iterdir()}
    assert names == {"order.csv", "order.txt", "curve_c500.csv", "curve_c500.json",
                     "curve_c1500.csv", "curve_c1500.json", "summary.json"}
    out = capsys.readouterr().out
    assert out.count("wrote ") == len(names)

    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert summary["schema_version"] == 1
    assert summary["provenance"] == "optimized"
    assert summary["mode"] == "characters"
    assert summary["gamma"] == 0.1
    assert summary["horizons"] == [500.0, 1500.0]
    assert set(summary["results"]) == {"500", "1500"}
    for r in summary["results"].values():
        assert set(r) == {"n_learned", "lambda_f", "lambda_avg"}
        assert 0.0 <= r["lambda_avg"] <= r["lambda_f"] <= 1.0

    csv_ids = parse_order_csv((tmp_path / "order.csv").read_text(encoding="utf-8"))
    txt_ids = parse_order((tmp_path / "order.txt").read_text(encoding="utf-8"))
    assert csv_ids == txt_ids
    assert summary["n_items"] == len(csv_ids)


def test_reruns_are_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run("order", "--out", a, "--c0", 7) == 0
    assert run("order", "--out", b, "--c0", 7) == 0
    files = sorted(p.name for p in a.iterdir())
    assert files == sorted(p.name for p in b.iterdir())
    for name in files:
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_order_output_passes_validate(tmp_path, capsys):
    assert run("order", "--out", tmp_path) == 0
    assert run("validate", tmp_path / "order.txt") == 0
    out = capsys.readouterr().out
    assert "violations: 0" in out


def test_custom_horizons_and_rejection(tmp_path, capsys):
    assert run("order", "--out", tmp_path, "--c0", 7, "--c0", 3) == 0
    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert summary["horizons"] == [3.0, 7.0]
    assert (tmp_path / "curve_c3.csv").exists()
    assert (tmp_path / "curve_c7.json").exists()
    assert run("order", "--out", tmp_path, "--c0", -1) == 1
    assert "positive" in capsys.readouterr().err


def test_known_primitives_dominate_default(tmp_path):
    base, known = tmp_path / "base", tmp_path / "known"
    assert run("order", "--out", base, "--c0", 10) == 0
    assert run("order", "--out", known, "--c0", 10, "--known", "all-primitives") == 0
    b = json.loads((base / "summary.json").read_text(encoding="utf-8"))["results"]["10"]
    k = json.loads((known / "summary.json").read_text(encoding="utf-8"))["results"]["10"]
    assert k["n_learned"] >= b["n_learned"]
    assert k["lambda_f"] >= b["lambda_f"]
    assert k["lambda_avg"] >= b["lambda_avg"]


def test_known_file_with_unknown_glyph_fails(tmp_path, capsys):
    bad = tmp_path / "known.txt"
    bad.write_text("口\n龘\n", encoding="utf-8")
    assert run("order", "--out", tmp_path, "--known", bad) == 1
    assert "龘" in capsys.readouterr().err


def test_data_dir_env_var(tmp_path, monkeypatch):
    data = tmp_path / "data"
    data.mkdir()
    (data / "decompositions.tsv").write_text(
        "a\tp\t\t1\nb\tp\t\t2\nx\tc\ta b\t3\n", encoding="utf-8")
    (data / "char_freq.tsv").write_text("x\t6\na\t3\nb\t1\n", encoding="utf-8")
    monkeypatch.setenv(DATA_ENV_VAR, str(data))
    out = tmp_path / "out"
    assert run("order", "--out", out) == 0
    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert summary["n_items"] == 3
    assert summary["coverage"] == 1.0

    # An explicit flag still wins over the environment directory.
    flat = tmp_path / "flat.tsv"
    flat.write_text("z\tp\t\t4\n", encoding="utf-8")
    out2 = tmp_path / "out2"
    assert run("order", "--out", out2, "--decompositions", flat,
               "--frequencies", data / "char_freq.tsv") == 0
    txt = (out2 / "order.txt").read_text(encoding="utf-8")
    assert txt.strip() == "z"


def test_missing_input_file_names_the_path(tmp_path, capsys):
    missing = tmp_path / "nope.tsv"
    assert run("order", "--out", tmp_path, "--decompositions", missing) == 1
    assert "nope.tsv" in capsys.readouterr().err


def test_cycle_exits_two(tmp_path, capsys):
    bad = tmp_path / "cyclic.tsv"
    bad.write_text("a\tc\tb b\t5\nb\tc\ta a\t5\n", encoding="utf-8")
    assert run("order", "--out", tmp_path, "--decompositions", bad) == 2
    assert "cycle" in capsys.readouterr().err.lower()


def test_validate_rote_order_exits_three(capsys):
    assert run("validate", DATA_DIR / "rote_order.txt") == 3
    out = capsys.readouterr().out
    assert "violation: " in out
    assert "coverage: " in out
    violations = [l for l in out.splitlines() if l.startswith("violation: ")]
    counted = [l for l in out.splitlines() if l.startswith("violations: ")]
    assert counted == ["violations: %d" % len(violations)]


def test_validate_empty_order_warns(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n", encoding="utf-8")
    assert run("validate", empty) == 0
    assert "warning: empty order" in capsys.readouterr().out


def test_compare_rote_against_baselines(tmp_path, capsys):
    out = tmp_path / "cmp"
    assert run("compare", DATA_DIR / "rote_order.txt", "--out", out,
               "--include-optimized", "--include-pure-frequency",
               "--c0", 12) == 0
    stdout = capsys.readouterr().out
    assert "rote_order: not hierarchal" in stdout

    rows = (out / "comparison.csv").read_text(encoding="utf-8").splitlines()
    assert rows[0] == "label,cost_mode,c0,n_learned,lambda_f,lambda_avg"
    by_key = {}
    for row in rows[1:]:
        label, mode, c0, n, lf, la = row.split(",")
        by_key[label, mode] = (int(n), float(lf), float(la))
    # A non-hierarchal order gets charge-mode scores only; the built-in
    # orders get both, and hierarchal equals charge on them.
    assert ("rote_order", "hierarchal") not in by_key
    assert by_key["optimized", "hierarchal"] == by_key["optimized", "charge-unlearned"]
    assert by_key["optimized", "hierarchal"][2] >= by_key["rote_order", "charge-unlearned"][2]

    names = {p.name for p in out.iterdir()}
    assert {"rote_order_charge_curve.csv", "rote_order_cluster.csv",
            "optimized_hier_curve.csv", "optimized_charge_curve.csv",
            "optimized_cluster.csv", "pure-frequency_charge_curve.json",
            "comparison.csv"} <= names
    assert "rote_order_hier_curve.csv" not in names


def test_compare_skips_bad_files_but_continues(tmp_path, capsys):
    out = tmp_path / "cmp"
    assert run("compare", tmp_path / "absent.txt", DATA_DIR / "rote_order.txt",
               "--out", out, "--c0", 12) == 0
    captured = capsys.readouterr()
    assert "absent.txt" in captured.err
    assert (out / "rote_order_charge_curve.csv").exists()


def test_compare_with_nothing_usable_fails(tmp_path, capsys):
    assert run("compare", tmp_path / "absent.txt", "--out", tmp_path) == 1
    assert "no usable orders" in capsys.readouterr().err


def test_cluster_default_and_explicit(tmp_path):
    assert run("cluster", "--out", tmp_path) == 0
    text = (tmp_path / "optimized_cluster.csv").read_text(encoding="utf-8")
    lines = text.splitlines()
    assert lines[0] == "n,avg_d1,avg_d2"
    assert lines[1].startswith("1,")

    assert run("cluster", DATA_DIR / "rote_order.txt", "--out", tmp_path,
               "--max-n", 5) == 0
    rote = (tmp_path / "rote_order_cluster.csv").read_text(encoding="utf-8")
    assert len(rote.splitlines()) == 6


def test_words_pipeline(tmp_path):
    assert run("words", "--out", tmp_path, "--c0", 15) == 0
    names = {p.name for p in tmp_path.iterdir()}
    assert names == {"words_order.csv", "words_order.txt", "words_curve_c15.csv",
                     "words_curve_c15.json", "words_summary.json", "dropped_words.txt"}
    summary = json.loads((tmp_path / "words_summary.json").read_text(encoding="utf-8"))
    assert summary["mode"] == "words"
    assert summary["top_k"] == 10000
    dropped = (tmp_path / "dropped_words.txt").read_text(encoding="utf-8")
    assert summary["n_dropped_words"] == len(dropped.splitlines())
    assert "什么" in dropped
    ids = parse_order((tmp_path / "words_order.txt").read_text(encoding="utf-8"))
    assert "知道" in ids
    assert ids.index("知") < ids.index("知道")
    assert "什么" not in ids


def test_words_top_k_restricts_expansion(tmp_path):
    assert run("words", "--out", tmp_path, "--top-k", 1, "--c0", 15) == 0
    ids = parse_order((tmp_path / "words_order.txt").read_text(encoding="utf-8"))
    assert all(len(g) == 1 for g in ids)


def test_order_with_target_list(tmp_path):
    target = tmp_path / "target.txt"
    target.write_text("的\n好\n不存在\n", encoding="utf-8")
    assert run("order", "--out", tmp_path, "--target", target) == 0
    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert summary["missing_targets"] == ["不存在"]
    ids = parse_order((tmp_path / "order.txt").read_text(encoding="utf-8"))
    assert set(ids) == {"的", "白", "勺", "好", "女", "子"}
