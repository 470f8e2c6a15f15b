import json


from scatalan.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_plain(self, capsys):
        code, out, _ = run(capsys, "count", "2,2,2,2")
        assert code == 0 and out == "14\n"

    def test_all_methods(self, capsys):
        code, out, _ = run(capsys, "count", "3,4,3", "--all-methods")
        assert code == 0
        assert out == "recurrence 15\ndeterminant 15\nexhaustive 15\n"

    def test_empty(self, capsys):
        code, out, _ = run(capsys, "count", "")
        assert code == 0 and out == "1\n"

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "count", "a,b")
        assert code == 2 and "error:" in err


class TestList:
    def test_paths(self, capsys):
        code, out, _ = run(capsys, "list", "path", "2,2")
        assert code == 0
        assert out == "NNEEE\nNENEE\ncount 2\n"

    def test_identity_tree(self, capsys):
        code, out, _ = run(capsys, "list", "tree", "")
        assert code == 0 and out == "[0]\ncount 1\n"

    def test_stirling_figure(self, capsys):
        code, out, _ = run(capsys, "list", "stirling312", "3,4,3")
        lines = out.strip().split("\n")
        assert code == 0 and lines[-1] == "count 15" and len(lines) == 16

    def test_proviso_exit_2(self, capsys):
        code, _, err = run(capsys, "list", "ncpartition", "2,1")
        assert code == 2

    def test_cap_exit_3(self, capsys):
        code, _, err = run(capsys, "--cap", "3", "list", "tree", "2,2,2")
        assert code == 3

    def test_jsonl(self, capsys):
        code, out, _ = run(capsys, "--format", "jsonl", "list", "path", "2,2")
        lines = [json.loads(line) for line in out.strip().split("\n")]
        assert lines[0] == {"mu": [0, 2], "s": [2, 2]}
        assert lines[-1] == {"count": 2}

    def test_determinism(self, capsys):
        _, first, _ = run(capsys, "list", "matching", "2,3,2")
        _, second, _ = run(capsys, "list", "matching", "2,3,2")
        assert first == second


class TestConvert:
    def test_tree_to_stirling(self, capsys):
        code, out, _ = run(
            capsys, "convert", "tree", "stirling312",
            "[3,4,0,0,4,0,0,0,0,0,0,2,5,0,0,0,0,0,0]", "-s", "3,4,4,2,5",
        )
        assert code == 0 and out == "2233321155554\n"

    def test_path_to_partition(self, capsys):
        code, out, _ = run(
            capsys, "convert", "path", "ncpartition",
            "s=3,4,4,2,5; mu=0,2,6,0,5", "-s", "3,4,4,2,5",
        )
        assert code == 0 and out == "1,2,6,7,8|3,4,5|9,10,11,12,13\n"

    def test_invalid_object_exit_2(self, capsys):
        code, _, _ = run(capsys, "convert", "stirling312", "tree", "1212", "-s", "3,3")
        assert code == 2


class TestRational:
    def test_5_8(self, capsys):
        code, out, _ = run(capsys, "rational", "5", "8")
        assert code == 0 and out == "2,3,2,3,2\n"


class TestNarayana:
    def test_agreement(self, capsys):
        code, out, _ = run(capsys, "narayana", "2,2,2")
        assert code == 0
        assert "peaks 1:1 2:3 3:1" in out
        assert "total 5" in out


class TestParking:
    def test_count(self, capsys):
        code, out, _ = run(capsys, "parking", "count", "1,1,1")
        assert code == 0 and out == "16\n"

    def test_list(self, capsys):
        code, out, _ = run(capsys, "parking", "list", "1,1")
        assert code == 0 and out == "0,0\n0,1\n1,0\ncount 3\n"


class TestArwCompare:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "arw-compare", "5", "13", "--mu", "0,2,4,4,2")
        assert code == 0
        rep = json.loads(out.strip())
        assert rep["equal"] is False


class TestVerify:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "4")
        assert code == 0 and out.strip().endswith("ok")

    def test_weight_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "0")
        assert code == 0
        assert out.startswith("(empty):")


class TestEnvCap:
    def test_scat_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("SCAT_CAP", "2")
        code, _, _ = run(capsys, "list", "tree", "2,2,2")
        assert code == 3
