import pytest

from tsslab.cli import main

TWO_PATH = "tss 2 1\nt 1 1\nt 2 1\ne 1 2\n"

CIRCUIT = """circuit 7
input 1
input 2
input 3
input 4
gate 5 or 1 2
gate 6 or 3 4
gate 7 and 5 6
output 7
"""


@pytest.fixture
def inst_file(tmp_path):
    p = tmp_path / "two.tss"
    p.write_text(TWO_PATH)
    return str(p)


def test_gen_writes_instance(tmp_path, capsys):
    out = tmp_path / "g.tss"
    assert main(["gen", "-n", "4", "-p", "1.0", "--thresholds", "unanimity", "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("tss 4 6")
    assert "t 1 3" in text


def test_gen_reproducible(capsys):
    assert main(["gen", "-n", "10", "-p", "0.5", "--seed", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "-n", "10", "-p", "0.5", "--seed", "3"]) == 0
    assert capsys.readouterr().out == first


def test_propagate_trace_record(inst_file, capsys):
    assert main(["propagate", "-i", inst_file, "-s", "1"]) == 0
    out = capsys.readouterr().out
    assert out == "seed 1\nround 1 2\nrounds 1\nclosed 2\nopen 1\n"


def test_propagate_empty_seed(inst_file, capsys):
    assert main(["propagate", "-i", inst_file, "-s", ""]) == 0
    out = capsys.readouterr().out
    assert "rounds 0\nclosed 0\nopen 0" in out


def test_propagate_bad_seed_exits_2(inst_file, capsys):
    assert main(["propagate", "-i", inst_file, "-s", "7"]) == 2
    assert "out of range" in capsys.readouterr().err


def test_solve_target_set(inst_file, capsys):
    assert main(["solve", "-i", inst_file, "--problem", "target-set"]) == 0
    out = capsys.readouterr().out
    assert "problem target-set" in out
    assert "value 1" in out
    assert "optimal true" in out


def test_solve_k_influence(inst_file, capsys):
    assert main(
        ["solve", "-i", inst_file, "--problem", "k-influence", "-k", "1", "--goal", "max"]
    ) == 0
    out = capsys.readouterr().out
    assert "k 1" in out and "value 2" in out


def test_solve_missing_k_exits_2(inst_file, capsys):
    assert main(["solve", "-i", inst_file, "--problem", "k-influence"]) == 2


def test_solve_threads_flag_same_output(tmp_path, capsys):
    p = tmp_path / "g.tss"
    from tsslab.cli import main as cli_main

    assert cli_main(["gen", "-n", "9", "-p", "0.5", "--seed", "4", "-o", str(p)]) == 0
    base = ["solve", "-i", str(p), "--problem", "k-influence", "-k", "2"]
    assert cli_main(base) == 0
    one = capsys.readouterr().out
    assert cli_main(base + ["--threads", "3"]) == 0
    assert capsys.readouterr().out == one


def test_solve_decision_bound(inst_file, capsys):
    args = ["solve", "-i", inst_file, "--problem", "k-influence", "-k", "1",
            "--goal", "min", "--mode", "open"]
    assert main(args + ["-l", "1"]) == 0
    assert "decision true" in capsys.readouterr().out
    assert main(args + ["-l", "0"]) == 0
    assert "decision false" in capsys.readouterr().out


def test_reduce_mcs_writes_three_files(tmp_path, capsys):
    circ = tmp_path / "c.circ"
    circ.write_text(CIRCUIT)
    out = tmp_path / "out"
    assert main(["reduce", "mcs", "-i", str(circ), "-o", str(out)]) == 0
    assert (out / "instance.tss").exists()
    assert (out / "provenance.txt").exists()
    assert (out / "params.txt").exists()
    assert "reduction circuit-tss" in (out / "params.txt").read_text()
    assert (out / "provenance.txt").read_text().splitlines()[0] == "1 in1"


def test_reduce_clique_params(tmp_path):
    g = tmp_path / "g.tss"
    lines = ["tss 8 28"] + [f"t {v} 1" for v in range(1, 9)]
    lines += [f"e {u} {v}" for u in range(1, 9) for v in range(u + 1, 9)]
    g.write_text("\n".join(lines) + "\n")
    out = tmp_path / "out"
    assert main(["reduce", "clique", "-i", str(g), "-k", "4", "--rho", "const:1"]
                + ["-o", str(out)]) == 0
    params = (out / "params.txt").read_text()
    assert "g 154" in params and "h 1" in params and "x 154" in params
    assert "vertices 714" in params


def test_reduce_clique_small_k_exits_2(tmp_path, capsys):
    g = tmp_path / "g.tss"
    g.write_text(TWO_PATH)
    assert main(["reduce", "clique", "-i", str(g), "-k", "3", "-o", str(tmp_path / "o")]) == 2
    assert "k >= 4" in capsys.readouterr().err


def test_reduce_thresholds_to_two(tmp_path):
    g = tmp_path / "g.tss"
    g.write_text(TWO_PATH)
    out = tmp_path / "out"
    assert main(["reduce", "thresholds-to-two", "-i", str(g), "-o", str(out)]) == 0
    assert "vertices 10" in (out / "params.txt").read_text()


def test_verify_padding_passes(capsys):
    assert main(["verify", "padding"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out


def test_verify_gadget_direction(capsys):
    assert main(["verify", "gadget-direction", "--chains", "3"]) == 0


def test_verify_small_propagation(capsys):
    assert main(["verify", "propagation", "--trials", "20", "--n", "10", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 3


def test_verify_unknown_flag_exits_2(capsys):
    assert main(["verify", "padding", "--trials", "5"]) == 2
    assert "does not take" in capsys.readouterr().err


def test_verify_unknown_suite_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "nonsense"])
    assert err.value.code == 2


def test_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.tss"
    bad.write_text("tss 1 0\nt 1 0\n")
    assert main(["propagate", "-i", str(bad), "-s", ""]) == 2
    assert "threshold below 1" in capsys.readouterr().err
