import json
import shutil

import pytest

from charzero.chartable import load_table, validate
from charzero.cli import main

from conftest import FIXTURE_DIR, FIXTURE_NAMES


@pytest.fixture()
def capout(capsys):
    def read():
        return capsys.readouterr()

    return read


class TestGen:
    def test_sym(self, tmp_path, capout):
        out = tmp_path / "s5.json"
        assert main(["gen", "sym", "5", "-o", str(out)]) == 0
        t = load_table(out)
        assert t.order == 120 and validate(t) == []

    def test_dihedral(self, tmp_path):
        out = tmp_path / "d32.json"
        assert main(["gen", "dihedral", "16", "-o", str(out)]) == 0
        t = load_table(out)
        assert t.order == 32 and validate(t) == []

    def test_product(self, tmp_path):
        a, b, out = tmp_path / "s5.json", tmp_path / "d32.json", tmp_path / "prod.json"
        assert main(["gen", "sym", "5", "-o", str(a)]) == 0
        assert main(["gen", "dihedral", "16", "-o", str(b)]) == 0
        assert main(["gen", "product", str(a), str(b), "-o", str(out)]) == 0
        assert load_table(out).order == 3840

    def test_abelian(self, tmp_path):
        out = tmp_path / "v4.json"
        assert main(["gen", "abelian", "2", "2", "-o", str(out)]) == 0
        assert load_table(out).order == 4

    def test_invalid_params(self, tmp_path, capsys):
        assert main(["gen", "sym", "abc", "-o", str(tmp_path / "x.json")]) == 2
        assert "error" in capsys.readouterr().err


class TestAnalyze:
    def test_s3_text(self, tmp_path, capsys):
        path = tmp_path / "s3.json"
        main(["gen", "sym", "3", "-o", str(path)])
        assert main(["analyze", str(path)]) == 0
        out = capsys.readouterr().out
        assert "non-vanishing classes: g(3,)" in out
        assert "k_min = 1" in out

    def test_d32_delta_independence(self, tmp_path, capsys):
        path = tmp_path / "d32.json"
        main(["gen", "dihedral", "16", "-o", str(path)])
        assert main(["analyze", str(path), "--format", "json"]) == 0
        info = json.loads(capsys.readouterr().out)
        assert info["delta_v_independence"] == 3

    def test_abelian_h0(self, tmp_path, capsys):
        path = tmp_path / "c6.json"
        main(["gen", "cyclic", "6", "-o", str(path)])
        assert main(["analyze", str(path)]) == 0
        assert "no nonlinear characters; H_0" in capsys.readouterr().out

    def test_missing_file(self, tmp_path, capsys):
        assert main(["analyze", str(tmp_path / "nope.json")]) == 2


class TestCover:
    def test_s5(self, tmp_path, capsys):
        path = tmp_path / "s5.json"
        main(["gen", "sym", "5", "-o", str(path)])
        assert main(["cover", str(path)]) == 0
        info = json.loads(capsys.readouterr().out)
        assert info["k_min"] == 2

    def test_max_k_exceeded(self, tmp_path, capsys):
        path = tmp_path / "s5.json"
        main(["gen", "sym", "5", "-o", str(path)])
        assert main(["cover", str(path), "--max-k", "1"]) == 1


class TestGraphs:
    def test_outputs(self, tmp_path):
        path = tmp_path / "d16.json"
        main(["gen", "dihedral", "8", "-o", str(path)])
        outdir = tmp_path / "graphs"
        assert main(["graphs", str(path), "--out", str(outdir), "--dot"]) == 0
        assert (outdir / "pattern.json").exists()
        dot = (outdir / "gamma_v.dot").read_text()
        assert dot.startswith("graph gamma_v {")
        assert (outdir / "delta_v.dot").exists()
        assert (outdir / "theta.dot").exists()


def build_corpus_dir(tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    for n in range(2, 8):
        main(["gen", "sym", str(n), "-o", str(corpus / f"s{n}.json")])
    for m in (3, 4, 6, 8, 16):
        main(["gen", "dihedral", str(m), "-o", str(corpus / f"d{2 * m}.json")])
    main(["gen", "abelian", "2", "4", "-o", str(corpus / "ab.json")])
    for name in FIXTURE_NAMES:
        shutil.copy(FIXTURE_DIR / f"{name}.json", corpus / f"{name}.json")
    return corpus


class TestVerify:
    def test_clean_corpus_exits_zero(self, tmp_path, capsys):
        corpus = build_corpus_dir(tmp_path)
        assert main(["verify", str(corpus)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("file,group,flags")

    def test_check_selection(self, tmp_path, capsys):
        corpus = build_corpus_dir(tmp_path)
        assert main(["verify", str(corpus), "--checks", "covers", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["checks"] == ["covers"]

    def test_unknown_check(self, tmp_path, capsys):
        corpus = build_corpus_dir(tmp_path)
        assert main(["verify", str(corpus), "--checks", "bogus"]) == 2

    def test_corrupted_table(self, tmp_path, capsys):
        corpus = build_corpus_dir(tmp_path)
        doc = json.loads((corpus / "s3.json").read_text())
        doc["characters"][1]["values"][1] = 7
        (corpus / "s3.json").write_text(json.dumps(doc))
        assert main(["verify", str(corpus)]) == 2
        assert "validation failed" in capsys.readouterr().err

    def test_deterministic_output(self, tmp_path, capsys):
        corpus = build_corpus_dir(tmp_path)
        main(["verify", str(corpus), "--format", "json"])
        first = capsys.readouterr().out
        main(["verify", str(corpus), "--format", "json"])
        assert capsys.readouterr().out == first


class TestReport:
    def test_csv_report(self, tmp_path):
        corpus = build_corpus_dir(tmp_path)
        out = tmp_path / "report.csv"
        assert main(["report", str(corpus), "-o", str(out)]) == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "group,order,n_classes,n_nonlinear,k_min,witness_names,flags"
        assert len(lines) == 1 + len(list(corpus.glob("*.json")))

    def test_json_report(self, tmp_path):
        corpus = build_corpus_dir(tmp_path)
        out = tmp_path / "report.json"
        assert main(["report", str(corpus), "-o", str(out)]) == 0
        rows = json.loads(out.read_text())
        by_group = {r["group"]: r for r in rows}
        assert by_group["A5"]["k_min"] == 3
        assert all(not r["flags"] for r in rows)
