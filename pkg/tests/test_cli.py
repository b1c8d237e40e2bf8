import subprocess
import sys

import pytest

from wildtree.cli import main


@pytest.fixture
def run(capsys, data_dir):
    def _run(*argv):
        args = [str(data_dir / a) if a.endswith(".graph") else a for a in argv]
        code = main(args)
        out, err = capsys.readouterr()
        return code, out, err
    return _run


@pytest.fixture
def lib4(tmp_path, run):
    path = tmp_path / "com4.lib"
    code, out, _ = run("library", "build", "-n", "4", "-o", str(path), "--no-timing")
    assert code == 0
    return path


class TestListings:
    def test_cycles_g1(self, run):
        code, out, _ = run("cycles", "g1.graph")
        assert code == 0
        assert out.splitlines() == ["1,2,3,4,5,6", "2,3,7,8,9,10", "1,4,5,6,7,8,9,10", "3 cycles"]

    def test_mincuts_com4(self, run):
        code, out, _ = run("mincuts", "com4.graph")
        assert code == 0
        assert out.splitlines()[-1] == "7 mincuts"
        assert out.splitlines()[0] == "1,2,3"

    def test_cycles_tree(self, run):
        assert run("cycles", "tree.graph")[1] == "0 cycles\n"

    def test_mincuts_disconnected_warns(self, run):
        code, out, err = run("mincuts", "disconnected.graph")
        assert code == 0 and "disconnected" in err and out == "0 mincuts\n"

    def test_parse_error(self, run):
        code, _, err = run("cycles", "bad.graph")
        assert code == 2
        assert "line 4" in err

    def test_missing_file(self, run, tmp_path):
        code, _, err = run("cycles", str(tmp_path / "none.graph"))
        assert code == 2 and err.startswith("error:")


class TestCompress:
    def test_com4_mcuts(self, run):
        code, out, _ = run("compress", "com4.graph", "--no-timing")
        assert code == 0
        assert out.splitlines() == ["method=mcuts n=4 m=6", "rows=6 trees=16"]

    def test_g1_cycles(self, run):
        code, out, _ = run("compress", "g1.graph", "--method", "cycles", "--no-timing")
        assert "rows=2 trees=32" in out.splitlines()

    def test_emit_rows(self, run):
        _, out, _ = run("compress", "com4.graph", "--emit-rows", "--no-timing")
        assert out.splitlines()[1:7] == ["e2,e1,1,e2,e2,e1", "e1,0,1,1,e1,0", "e1,1,0,e1,e1,1",
                                         "e1,1,0,e1,1,0", "1,0,0,e1,1,e1", "1,0,0,1,0,1"]

    def test_timing_line(self, run):
        _, out, _ = run("compress", "com4.graph")
        assert out.splitlines()[-1].startswith("elapsed=")

    def test_stats(self, run):
        _, out, _ = run("compress", "com4.graph", "--stats", "--no-timing")
        assert out.splitlines()[-1].startswith("impositions=")

    def test_library_method(self, run, lib4):
        code, out, _ = run("compress", "g2.graph", "--method", "library", "--lib", str(lib4), "--no-timing",
                           "--emit-rows")
        assert code == 0
        # rows in the graph's own labels 1..4
        assert out.splitlines() == ["method=library n=4 m=4", "e1,1,1,e1", "1,0,1,1", "rows=2 trees=3"]

    def test_library_method_needs_lib(self, run):
        assert run("compress", "com4.graph", "--method", "library")[0] == 2

    def test_disconnected(self, run):
        code, _, err = run("compress", "disconnected.graph")
        assert code == 2 and "not connected" in err

    def test_cycle_limit(self, run):
        code, _, err = run("compress", "com7.graph", "--method", "cycles", "--max-cycles", "10")
        assert code == 3 and "limit" in err

    def test_stack_limit(self, run):
        code, _, _ = run("compress", "com7.graph", "--max-stack", "2")
        assert code == 3

    def test_deterministic(self, run):
        first = run("compress", "com7.graph", "--emit-rows", "--no-timing")[1]
        assert run("compress", "com7.graph", "--emit-rows", "--no-timing")[1] == first


class TestLibrary:
    def test_build(self, lib4):
        lines = lib4.read_text().splitlines()
        assert lines[0].startswith("WILDTREE-LIB v1 n=4 rows=6 trees=16")
        assert len(lines) == 7

    def test_build_report(self, run, tmp_path):
        code, out, _ = run("library", "build", "-n", "5", "-o", str(tmp_path / "l5"))
        assert code == 0
        assert out.splitlines()[0].startswith("library n=5 rows=24 trees=125")
        assert out.splitlines()[1].startswith("elapsed=")

    def test_build_bound(self, run, tmp_path):
        code, _, err = run("library", "build", "-n", "10", "-o", str(tmp_path / "l"))
        assert code == 2 and "bound" in err

    def test_sieve(self, run, lib4):
        code, out, _ = run("library", "sieve", "--lib", str(lib4), "g2.graph", "--no-timing")
        assert code == 0
        assert out == "relevant=3 rows=2 trees=3\n"

    def test_sieve_not_spanning(self, run, lib4):
        code, out, _ = run("library", "sieve", "--lib", str(lib4), "triangle.graph", "--no-timing")
        assert code == 0 and out == "0 rows (input not spanning)\n"

    def test_sieve_bad_library(self, run, tmp_path):
        path = tmp_path / "x.lib"
        path.write_text("not a library\n")
        code, _, err = run("library", "sieve", "--lib", str(path), "g2.graph")
        assert code == 2 and "header" in err


class TestCount:
    def test_com9(self, run, tmp_path):
        path = tmp_path / "com9.graph"
        assert run("generate", "--complete", "9")[0] == 0
        path.write_text(run("generate", "--complete", "9")[1])
        assert run("count", str(path))[1] == "4782969\n"

    def test_tree(self, run):
        assert run("count", "tree.graph")[1] == "1\n"

    def test_matches_compress(self, run, tmp_path):
        path = tmp_path / "r.graph"
        path.write_text(run("generate", "--random", "8", "14", "--seed", "5")[1])
        count = run("count", str(path))[1].strip()
        assert f"trees={count}" in run("compress", str(path), "--no-timing")[1]


class TestVerify:
    def test_com4(self, run):
        code, out, _ = run("verify", "com4.graph")
        assert code == 0
        assert out.splitlines()[-1] == "PASS"
        assert all(not line.startswith("FAIL") for line in out.splitlines())

    def test_g1(self, run):
        code, out, _ = run("verify", "g1.graph")
        assert code == 0
        assert "kirchhoff=32" in out.splitlines()
        assert "PASS cycles rows=2 trees=32" in out.splitlines()

    def test_with_library(self, run, lib4):
        code, out, _ = run("verify", "g2.graph", "--lib", str(lib4))
        assert code == 0
        assert "PASS library rows=2 trees=3" in out.splitlines()

    def test_corrupted_library(self, run, lib4):
        text = lib4.read_text().splitlines()
        text[1], text[2] = text[2], text[1]
        lib4.write_text("\n".join(text) + "\n")
        code, out, _ = run("verify", "com4.graph", "--lib", str(lib4))
        assert code == 1
        assert any(line.startswith("FAIL library") and "checksum" in line for line in out.splitlines())
        assert out.splitlines()[-1] == "FAIL (1 check failed)"

    def test_disconnected(self, run):
        code, out, _ = run("verify", "disconnected.graph")
        assert code == 0 and out.splitlines()[-1] == "PASS"


class TestConjectures:
    def test_n4(self, run):
        _, out, _ = run("conjectures", "-n", "4")
        assert "rows=6 (n-1)!=6 equal=yes" in out
        assert "all_tree_rows=yes" in out

    def test_n8(self, run):
        _, out, _ = run("conjectures", "-n", "8")
        assert "rows=5040 (n-1)!=5040 equal=yes" in out
        assert "max_capacity=5040 equals_(n-1)!=yes" in out

    def test_n6_random(self, run):
        code, out, _ = run("conjectures", "-n", "6", "--seed", "1")
        assert code == 0 and "ordering=random(seed=1)" in out
        assert "n^(n-2)=1296 equal=yes" in out

    def test_bound(self, run):
        assert run("conjectures", "-n", "12")[0] == 2


class TestMisc:
    def test_reliability_triangle(self, run, tmp_path):
        path = tmp_path / "t.graph"
        path.write_text("3 3\n1 2\n1 3\n2 3\n")
        code, out, _ = run("reliability", str(path))
        assert out.splitlines() == ["c=0,0,3,1", "rel=0,0,3,-2"]

    def test_generate_random_is_connected(self, run, tmp_path):
        out = run("generate", "--random", "11", "20", "--seed", "3")[1]
        assert out.splitlines()[1] == "11 20"
        path = tmp_path / "g.graph"
        path.write_text(out)
        assert int(run("count", str(path))[1]) > 0

    def test_generate_bad(self, run):
        assert run("generate", "--random", "5", "2")[0] == 2

    def test_module_entry_point(self, data_dir):
        proc = subprocess.run([sys.executable, "-m", "wildtree", "count", str(data_dir / "g1.graph")],
                              capture_output=True, text=True, check=True)
        assert proc.stdout == "32\n"

    def test_version(self, run):
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
