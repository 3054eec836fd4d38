import io
import subprocess
import sys

import pytest

from ulambound import cli


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


FIG2_SCRIPT = "A=0,1 answer=Y\nA=0,2 answer=Y\nA=0 answer=N\nA=0,1 answer=Y\nA=0 answer=Y\n"


def test_bound():
    code, out = run(["bound", "-m", "3", "-t", "1"])
    assert code == 0 and out == "m=3 t=1 spb_n=4 new_n=5 improved\n"
    code, out = run(["bound", "-m", "1", "-t", "0"])
    assert code == 0 and "spb_n=0 new_n=0" in out


def test_bound_k_sequence_at_fixed_n():
    code, out = run(["bound", "-m", "3", "-t", "1", "--show-k-sequence", "--n", "4"])
    assert code == cli.EXIT_NEGATIVE
    assert out.splitlines() == ["n=4 K=15,9,5,3,2", "n=4 infeasible at i=1 (9 > 8)"]
    code, out = run(["bound", "-m", "3", "-t", "1", "--n", "5"])
    assert code == 0 and out == "n=5 feasible spb=yes\n"


def test_bound_shows_each_examined_length():
    code, out = run(["bound", "-m", "3", "-t", "1", "--show-k-sequence"])
    assert code == 0
    assert "n=4 infeasible at i=1 (9 > 8)" in out and "n=5 K=18,11,6,3,2,1" in out


@pytest.mark.parametrize("argv", [["bound", "-m", "0", "-t", "1"], ["bound", "-t", "1"],
                                  ["nosuch"], ["sweep", "--t", "x"]])
def test_usage_errors(argv):
    assert run(argv)[0] == cli.EXIT_USAGE


def test_sweep_csv(tmp_path):
    path = tmp_path / "s.csv"
    code, _ = run(["sweep", "--m-max", "20", "--t", "1,2", "-o", str(path)])
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "m,t,spb_n,new_n,improved"
    assert "3,1,4,5,1" in lines and "16,1,7,7,0" in lines
    assert len(lines) == 41
    for row in lines[1:]:
        m, t, spb, new, imp = map(int, row.split(","))
        assert new >= spb and imp == int(new > spb)


def test_sweep_parallel_bytes_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(["sweep", "--m-max", "12000", "--t", "1,3", "-o", str(a)])
    run(["sweep", "--m-max", "12000", "--t", "1,3", "--workers", "3", "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_sweep_unwritable_path(tmp_path):
    assert run(["sweep", "--m-max", "3", "-o", str(tmp_path / "no" / "x.csv")])[0] == cli.EXIT_ERROR


def test_config_precedence(tmp_path, monkeypatch):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("# settings\nm_max = 4\nt_list = 2\n")
    code, out = run(["--config", str(cfg), "sweep"])
    assert code == 0 and out.splitlines()[1:] == ["1,2,0,0,0", "2,2,5,5,0", "3,2,7,7,0", "4,2,7,7,0"]
    monkeypatch.setenv("SPB_M_MAX", "2")
    code, out = run(["--config", str(cfg), "sweep"])
    assert len(out.splitlines()) == 3
    code, out = run(["--config", str(cfg), "sweep", "--m-max", "3", "--t", "1"])
    assert out.splitlines()[1:] == ["1,1,0,0,0", "2,1,3,3,0", "3,1,4,5,1"]
    monkeypatch.setenv("SPB_CONFIG", str(cfg))
    monkeypatch.delenv("SPB_M_MAX")
    code, out = run(["sweep"])
    assert len(out.splitlines()) == 5


def test_game_script(tmp_path):
    script = tmp_path / "fig2.txt"
    script.write_text(FIG2_SCRIPT)
    code, out = run(["game", "-m", "3", "-t", "1", "-n", "5", "--script", str(script)])
    assert code == 0
    assert "step=4 A={0,1} answer=Y bins={}|{0,1} lost={2} weight=2" in out
    assert out.rstrip().endswith("outcome=Conclusive survivors={0}")


def test_game_script_without_answers_uses_adversary(tmp_path):
    script = tmp_path / "q.txt"
    script.write_text("A=0\nA=1\nA=0,1\nA=\n")
    code, out = run(["game", "-m", "3", "-t", "1", "-n", "4", "--script", str(script)])
    assert code == cli.EXIT_NEGATIVE and "outcome=Inconclusive" in out


def test_game_auto(tmp_path):
    code, out = run(["game", "-m", "3", "-t", "1", "-n", "4", "--auto"])
    assert code == cli.EXIT_NEGATIVE and "outcome=Inconclusive" in out
    trace = tmp_path / "t.txt"
    code, out = run(["game", "-m", "1", "-t", "0", "-n", "0", "--auto", "-o", str(trace)])
    assert code == 0 and out == ""
    assert trace.read_text().splitlines()[-1] == "outcome=Conclusive survivors={0}"


def test_game_script_errors(tmp_path):
    long = tmp_path / "long.txt"
    long.write_text(FIG2_SCRIPT)
    assert run(["game", "-m", "3", "-t", "1", "-n", "4", "--script", str(long)])[0] == cli.EXIT_USAGE
    bad = tmp_path / "bad.txt"
    bad.write_text("A=7 answer=Y\n")
    assert run(["game", "-m", "3", "-t", "1", "-n", "4", "--script", str(bad)])[0] == cli.EXIT_USAGE
    mixed = tmp_path / "mixed.txt"
    mixed.write_text("A=0 answer=Y\nA=1\n")
    assert run(["game", "-m", "3", "-t", "1", "-n", "4", "--script", str(mixed)])[0] == cli.EXIT_USAGE


def test_verify():
    code, out = run(["verify", "--check-code", "00000,11100,11011"])
    assert code == 0
    assert "m=3 t=1 spb_n=4 new_n=5 game_min_n=5 code_min_n=5 consistent" in out
    assert out.splitlines()[-1].startswith("code n=5 m=3 t=1 min_distance=3 valid=yes")
    assert "INCONSISTENT" not in out


def test_verify_flags_bad_code():
    code, out = run(["verify", "--m-max", "2", "--t-max", "1", "--check-code", "0000,1110,0111"])
    assert code == cli.EXIT_INCONSISTENT and "valid=no" in out


def test_verify_cap():
    assert run(["verify", "--game-n-max", "30"])[0] == cli.EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ulambound", "bound", "-m", "16", "-t", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "m=16 t=1 spb_n=7 new_n=7 equal\n"
