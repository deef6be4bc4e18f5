"""Command line interface: JSON output, exit codes, result cache.

Exit code contract: 0 on success, 1 on domain errors (invalid diagram,
strand limits, bad parameters), 2 on usage errors (malformed braid
words, missing arguments, out-of-range verify bounds)."""

import json
import math
import os

import pytest

from hsk.cli import main


@pytest.fixture(autouse=True)
def _isolate_cwd(tmp_path, monkeypatch):
    # the default cache directory is ./.hsk-cache; keep it out of the repo
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("HSK_CACHE", raising=False)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, f"exit {code}, stderr: {err}"
    return json.loads(out)


class TestBasicCommands:
    def test_labels(self, capsys):
        assert run_json(capsys, "labels", "--N", "2", "--K", "2") == [[], [1], [2]]

    def test_labels_level_one(self, capsys):
        got = run_json(capsys, "labels", "--N", "4", "--K", "1")
        assert got == [[], [1], [1, 1], [1, 1, 1]]

    def test_qint(self, capsys):
        got = run_json(capsys, "qint", "2", "--N", "2", "--K", "2")
        assert got["embed"][0] == pytest.approx(math.sqrt(2))
        assert got["embed"][1] == pytest.approx(0, abs=1e-12)

    def test_dagger(self, capsys):
        assert run_json(capsys, "dagger", "1", "--N", "3", "--K", "2") == [1, 1]
        assert run_json(capsys, "dagger", "2,1", "--N", "3", "--K", "2") == [2, 1]

    def test_branch(self, capsys):
        got = run_json(capsys, "branch", "1,1", "--N", "3", "--K", "2", "--strands", "5")
        assert got == [[1], [2, 2]]

    def test_paths(self, capsys):
        got = run_json(capsys, "paths", "1", "--N", "2", "--K", "2", "--strands", "5")
        assert got == {"n": 5, "diagram": [1], "count": 4}

    def test_jw(self, capsys):
        got = run_json(capsys, "jw", "--N", "2", "--K", "2", "--strands", "2", "--kind", "sym")
        assert got["n"] == 2
        assert len(got["terms"]) == 2

    def test_yidem(self, capsys):
        got = run_json(capsys, "yidem", "2,1", "--N", "3", "--K", "2")
        assert got["diagram"] == [2, 1]
        assert got["idempotent"] is not None
        assert set(got["hook"]) == {"num", "den", "embed"}


class TestTraceAndClosure:
    def test_trace_single_crossing(self, capsys):
        got = run_json(capsys, "trace", "--N", "2", "--K", "2", "--strands", "2", "--braid", "1")
        re, im = got["embed"]
        assert re == pytest.approx(0.2706, abs=1e-4)
        assert im == pytest.approx(-0.6533, abs=1e-4)

    def test_closure_unknot(self, capsys):
        got = run_json(capsys, "closure", "--N", "2", "--K", "2", "--strands", "1", "--braid", "")
        assert got["embed"][0] == pytest.approx(math.sqrt(2))

    def test_closure_kink(self, capsys):
        got = run_json(capsys, "closure", "--N", "2", "--K", "2", "--strands", "2", "--braid", "-1")
        val = complex(*got["embed"])
        expect = math.sqrt(2) * complex(math.cos(6 * math.pi / 16), math.sin(6 * math.pi / 16))
        assert abs(val - expect) < 1e-12

    def test_strands_inferred_from_word(self, capsys):
        got = run_json(capsys, "closure", "--N", "2", "--K", "1", "--braid", "1 2 1")
        assert "embed" in got


class TestAlgebraCommands:
    def test_gram(self, capsys):
        got = run_json(capsys, "gram", "--N", "2", "--K", "2", "--strands", "3")
        assert got == {"n": 3, "form": "bilinear", "dim": 6, "rank": 4, "kernel_dim": 2}

    def test_gram_full(self, capsys):
        got = run_json(capsys, "gram", "--N", "2", "--K", "2", "--strands", "2", "--full")
        assert len(got["matrix"]) == 2
        assert set(got["matrix"][0][0]) == {"num", "den", "embed"}

    def test_purify(self, capsys):
        got = run_json(capsys, "purify", "--N", "3", "--K", "2", "--strands", "4")
        assert got == {"dim": 13, "radical_dim": 11}

    def test_blocks(self, capsys):
        got = run_json(capsys, "blocks", "--N", "2", "--K", "2", "--strands", "4")
        assert got["labels"] == [[], [2]]
        assert got["dims"] == {"[]": 2, "[2]": 2}

    def test_blocks_full(self, capsys):
        got = run_json(capsys, "blocks", "--N", "2", "--K", "1", "--strands", "3", "--full")
        assert "central_idempotents" in got


class TestCategoryCommands:
    def test_fusion_triple(self, capsys):
        got = run_json(capsys, "fusion", "2", "2", "", "--N", "2", "--K", "2")
        assert got == {"a": [2], "b": [2], "c": [], "n": 1}

    def test_fusion_zero(self, capsys):
        got = run_json(capsys, "fusion", "2", "2", "2", "--N", "2", "--K", "2")
        assert got["n"] == 0

    def test_fusion_table(self, capsys):
        got = run_json(capsys, "fusion", "--table", "--max-strands", "2", "--N", "2", "--K", "2")
        entries = {(tuple(e["a"]), tuple(e["b"]), tuple(e["c"])): e["n"] for e in got["entries"]}
        assert entries[((1,), (1,), ())] == 1
        assert entries[((1,), (1,), (2,))] == 1

    def test_qdim(self, capsys):
        got = run_json(capsys, "qdim", "2", "--N", "3", "--K", "2")
        assert got["embed"][0] == pytest.approx(1.0)
        assert got["embed"][1] == pytest.approx(0, abs=1e-12)

    def test_twist_semion(self, capsys):
        got = run_json(capsys, "twist", "1", "--N", "2", "--K", "1")
        assert got["embed"][0] == pytest.approx(0, abs=1e-12)
        assert got["embed"][1] == pytest.approx(1.0)

    def test_smatrix(self, capsys):
        got = run_json(capsys, "smatrix", "--N", "2", "--K", "1")
        assert got["labels"] == [[], [1]]
        assert got["entries"][1][1]["embed"][0] == pytest.approx(-1.0)

    def test_mfdim_four_points(self, capsys):
        got = run_json(
            capsys, "mfdim", "--N", "2", "--K", "2", "--genus", "0",
            "--label", "1", "--label", "1", "--label", "1", "--label", "1",
        )
        assert got == {"genus": 0, "labels": [[1], [1], [1], [1]], "dim": 2}

    def test_mfdim_torus(self, capsys):
        got = run_json(capsys, "mfdim", "--N", "2", "--K", "2", "--genus", "1")
        assert got["dim"] == 3


class TestVerifyCommand:
    def test_small_run_passes(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--N", "2", "--K", "1", "--max-n", "2")
        assert code == 0
        report = json.loads(out)
        assert report["overall"] == "pass"
        assert report["params"] == {"N": 2, "K": 1, "max_n": 2, "seed": 0}
        names = [c["name"] for c in report["checks"]]
        assert "trace.markov_property" in names
        assert all(c["status"] in ("pass", "skip") for c in report["checks"])

    def test_deterministic_modulo_elapsed(self, capsys):
        def strip(report):
            for c in report["checks"]:
                c.pop("elapsed")
            return report

        a = strip(run_json(capsys, "verify", "--N", "2", "--K", "1", "--max-n", "2"))
        b = strip(run_json(capsys, "verify", "--N", "2", "--K", "1", "--max-n", "2"))
        assert a == b

    def test_max_n_out_of_range(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--N", "2", "--K", "1", "--max-n", "9")
        assert code == 2
        assert "usage error" in err


class TestExitCodes:
    def test_empty_braid_needs_strands(self, capsys):
        code, _, err = run_cli(capsys, "trace", "--N", "2", "--K", "2", "--braid", "")
        assert code == 2
        assert "usage error" in err

    def test_zero_braid_letter(self, capsys):
        code, _, err = run_cli(capsys, "trace", "--N", "2", "--K", "2", "--braid", "0")
        assert code == 2

    def test_strands_too_small(self, capsys):
        code, _, err = run_cli(
            capsys, "trace", "--N", "2", "--K", "2", "--strands", "2", "--braid", "2"
        )
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        assert run_cli(capsys, "frobnicate", "--N", "2", "--K", "2")[0] == 2

    def test_fusion_needs_three_or_table(self, capsys):
        code, _, err = run_cli(capsys, "fusion", "1", "--N", "2", "--K", "2")
        assert code == 2

    def test_trace_strand_limit_is_domain_error(self, capsys):
        code, _, err = run_cli(
            capsys, "trace", "--N", "2", "--K", "2", "--strands", "9", "--braid", ""
        )
        assert code == 1
        assert "error" in err

    def test_gram_limit_is_domain_error(self, capsys):
        code, _, _ = run_cli(capsys, "gram", "--N", "2", "--K", "2", "--strands", "7")
        assert code == 1

    def test_dagger_non_label(self, capsys):
        code, _, _ = run_cli(capsys, "dagger", "3", "--N", "2", "--K", "2")
        assert code == 1

    def test_bad_rank(self, capsys):
        code, _, err = run_cli(capsys, "labels", "--N", "1", "--K", "2")
        assert code == 1

    def test_malformed_diagram_is_usage_error(self, capsys):
        # non-decreasing rows are a syntax problem, not a domain one
        code, _, _ = run_cli(capsys, "qdim", "1,2", "--N", "2", "--K", "2")
        assert code == 2


class TestOutputModes:
    def test_pretty_matches_json(self, capsys):
        plain = run_cli(capsys, "labels", "--N", "2", "--K", "2")[1]
        pretty = run_cli(capsys, "labels", "--N", "2", "--K", "2", "--pretty")[1]
        assert json.loads(plain) == json.loads(pretty)
        assert "\n  " in pretty

    def test_plain_is_single_line(self, capsys):
        out = run_cli(capsys, "smatrix", "--N", "2", "--K", "2")[1]
        assert out.count("\n") == 1

    def test_deterministic_bytes(self, capsys):
        a = run_cli(capsys, "smatrix", "--N", "2", "--K", "2")[1]
        b = run_cli(capsys, "smatrix", "--N", "2", "--K", "2")[1]
        assert a == b


class TestCache:
    def test_cold_and_warm_agree(self, capsys, tmp_path):
        cache = str(tmp_path / "c")
        argv = ["qdim", "2", "--N", "2", "--K", "2", "--cache", cache]
        cold = run_cli(capsys, *argv)[1]
        files = list((tmp_path / "c").glob("*.json"))
        assert len(files) == 1
        warm = run_cli(capsys, *argv)[1]
        assert warm == cold

    def test_entry_shape(self, capsys, tmp_path):
        cache = str(tmp_path / "c")
        run_cli(capsys, "qdim", "2", "--N", "2", "--K", "2", "--cache", cache)
        entry = json.loads(next((tmp_path / "c").glob("*.json")).read_text())
        assert set(entry) == {"version", "key", "checksum", "payload"}
        assert entry["key"][1:3] == [2, 2]

    def test_corrupt_entry_recomputed(self, capsys, tmp_path):
        cache = str(tmp_path / "c")
        argv = ["qdim", "2", "--N", "2", "--K", "2", "--cache", cache]
        cold = run_cli(capsys, *argv)[1]
        target = next((tmp_path / "c").glob("*.json"))
        target.write_text("{not json")
        assert run_cli(capsys, *argv)[1] == cold
        # tampered payload with stale checksum is ignored too
        entry = json.loads(next((tmp_path / "c").glob("*.json")).read_text())
        entry["payload"] = {"num": [[9, 1]], "den": 1, "embed": [9.0, 0.0]}
        target.write_text(json.dumps(entry))
        assert run_cli(capsys, *argv)[1] == cold

    def test_env_var_cache_dir(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("HSK_CACHE", str(tmp_path / "envc"))
        run_cli(capsys, "twist", "1", "--N", "2", "--K", "1")
        assert list((tmp_path / "envc").glob("*.json"))

    def test_distinct_keys_distinct_files(self, capsys, tmp_path):
        cache = str(tmp_path / "c")
        run_cli(capsys, "qdim", "1", "--N", "2", "--K", "2", "--cache", cache)
        run_cli(capsys, "qdim", "2", "--N", "2", "--K", "2", "--cache", cache)
        run_cli(capsys, "qdim", "1", "--N", "2", "--K", "1", "--cache", cache)
        assert len(list((tmp_path / "c").glob("*.json"))) == 3
