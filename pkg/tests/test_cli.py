import json
import math
import subprocess
import sys

import pytest

from linniklab.cli import main

SCHEDULE_DESK_GOLDEN = (
    '{"x": 100000.0, "q0_sq": 4.50728223331559e-19, "d": 100.0, "delta": 1.0, '
    '"theta0": 0.02895765365907, "eps": 0.01, "h": 13254.745276196, '
    '"mode": "desk"}'
)

TRIPLES_X30_GOLDEN = """\
# p1\tp2\tp3\tx\ty\tresidual
5\t2\t3\t1\t1\t0
5\t3\t2\t0\t1\t0
7\t2\t5\t0\t2\t0
7\t5\t2\t0\t1\t0
13\t2\t11\t1\t3\t0
13\t11\t2\t0\t1\t0
19\t2\t17\t0\t4\t0
19\t17\t2\t0\t1\t0
"""

LINNIK_X100_GOLDEN = """\
# p\tx\ty
2\t0\t1
3\t1\t1
5\t0\t2
11\t1\t3
17\t0\t4
19\t3\t3
37\t0\t6
41\t2\t6
53\t4\t6
59\t3\t7
73\t6\t6
83\t1\t9
"""


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_schedule_desk_golden(capsys):
    rc, out, err = run(capsys, "schedule", "--x", "1e5", "--mode", "desk",
                       "--d", "100", "--eps", "0.01")
    assert rc == 0 and err == ""
    assert out.strip() == SCHEDULE_DESK_GOLDEN


def test_schedule_paper_mode(capsys):
    rc, out, _ = run(capsys, "schedule", "--x", "1e6")
    assert rc == 0
    doc = json.loads(out)
    assert doc["mode"] == "paper"
    assert set(doc) == {"x", "q0_sq", "d", "delta", "theta0", "eps", "h", "mode"}
    assert doc["eps"] > 1.0


def test_schedule_eps_report(capsys):
    rc, out, _ = run(capsys, "schedule", "--eps-report")
    assert rc == 0
    doc = json.loads(out)
    assert doc["eps_exceeds_one"] is True
    assert doc["concave_in_t"] is True
    assert doc["x_hi"] == 1e300
    assert doc["eps_min_lower_bound"] > 1.0


def test_cfrac_golden(capsys):
    rc, out, _ = run(capsys, "cfrac", "--name", "sqrt2", "--count", "5")
    assert rc == 0
    assert out.splitlines() == [
        "# index\ta\tq",
        "0\t1\t1", "1\t3\t2", "2\t7\t5", "3\t17\t12", "4\t41\t29",
    ]


def test_cfrac_pattern_and_verify(capsys):
    rc, out, _ = run(capsys, "cfrac", "--name", "e", "--count", "6", "--pattern")
    assert rc == 0
    assert out.splitlines()[1:] == [
        "0\t2\t1", "1\t3\t1", "2\t8\t3", "3\t11\t4", "4\t19\t7", "5\t87\t32",
    ]
    rc, out, _ = run(capsys, "cfrac", "--name", "sqrt2", "--count", "3",
                     "--verify")
    lines = out.splitlines()
    assert lines[0] == "# index\ta\tq\tq2_err"
    # every certified convergent keeps q²·|x − a/q| below 1
    for row in lines[1:]:
        assert float(row.split("\t")[3]) < 1.0


def test_cfrac_rational_and_errors(capsys):
    rc, out, _ = run(capsys, "cfrac", "--value", "355/113", "--count", "10")
    assert rc == 0
    assert out.splitlines()[1:] == ["0\t3\t1", "1\t22\t7", "2\t355\t113"]
    rc, _, err = run(capsys, "cfrac", "--value", "0.5±0.6")
    assert rc == 2 and "first partial quotient" in err


def test_kernel_tsv_golden(capsys):
    rc, out, _ = run(capsys, "kernel", "--eps", "1", "--k", "2", "--grid", "5")
    assert rc == 0
    assert out.splitlines() == [
        "# y\ttheta\tantideriv",
        "-1.25\t0\t0",
        "-0.625\t1\t0.25",
        "0\t1\t0.875",
        "0.625\t1\t1.5",
        "1.25\t0\t1.75",
    ]


def test_kernel_fourier_golden(capsys):
    rc, out, _ = run(capsys, "kernel", "--eps", "1", "--k", "2", "--grid", "3",
                     "--fourier")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "# x\ttheta_hat\tbound"
    assert lines[1] == "0\t1.75\t1.75"
    for row in lines[1:]:
        x, th, bd = (float(v) for v in row.split("\t"))
        assert abs(th) <= bd * (1 + 1e-12)


def test_expsum_json(capsys, table4):
    from linniklab.expsums import i_j, s_ld

    rc, out, _ = run(capsys, "expsum", "--x", "1000", "--alpha", "0.1",
                     "--lo", "500", "--hi", "1000")
    assert rc == 0
    doc = json.loads(out)
    s = s_ld(table4, 1, 1, (500.0, 1000.0), 0.1)
    i = i_j((500.0, 1000.0), 0.1)
    assert doc["s_re"] == pytest.approx(s.real, rel=1e-14)
    assert doc["s_abs"] == pytest.approx(abs(s), rel=1e-14)
    assert doc["i_abs"] == pytest.approx(abs(i), rel=1e-14, abs=1e-20)
    assert doc["gap_over_x"] == pytest.approx(abs(s - i) / 1000.0, rel=1e-14)
    assert doc["alpha_exceeds_delta"] is None


def test_eterm_golden(capsys):
    rc, out, _ = run(capsys, "eterm", "--x", "10", "--q", "1", "--a", "1")
    assert rc == 0
    assert out.strip() == '{"x": 10.0, "q": 1, "a": 1, "e_term": -4.65289246928253}'


def test_bvsum(capsys):
    rc, out, _ = run(capsys, "bvsum", "--x", "10", "--q-max", "1")
    assert rc == 0
    assert json.loads(out)["bv_sum"] == 4.65289246928253
    rc, out, _ = run(capsys, "bvsum", "--x", "10", "--q-max", "0")
    assert rc == 0
    assert json.loads(out)["bv_sum"] == 0.0


def test_minorarc_json(capsys):
    rc, out, _ = run(capsys, "minorarc", "--x", "1000", "--a", "1", "--q", "5")
    assert rc == 0
    doc = json.loads(out)
    assert doc["alpha"] == 0.2          # defaults to a/q
    assert doc["ratio"] == pytest.approx(doc["s_abs"] / doc["bound"], rel=1e-14)


def test_gamma_sharp_golden(capsys):
    rc, out, _ = run(capsys, "gamma", "--mode", "sharp", "--x", "30",
                     "--l1", "1", "--l2", "-1", "--l3", "-1", "--eta", "0",
                     "--eps", "0.5", "--lambda0", "0.05")
    assert rc == 0
    assert out.strip() == ('{"mode": "sharp", "x": 30.0, "eps": 0.5, '
                           '"gamma": 124.588567452503, "triple_count": 8}')


def test_gamma_split_json(capsys):
    rc, out, _ = run(capsys, "gamma", "--mode", "split", "--x", "1000",
                     "--l1", "1.4", "--l2", "-1", "--l3", "-1.7",
                     "--eta", "0", "--eps", "2", "--lambda0", "0.1")
    assert rc == 0
    doc = json.loads(out)
    assert doc["d"] == pytest.approx(1000.0**0.4, rel=1e-12)  # default cut
    assert 4.0 * (doc["g1"] + doc["g2"] + doc["g3"]) == pytest.approx(
        doc["gamma0"], rel=1e-9)
    assert doc["gamma"] >= doc["gamma0"] >= 0.0
    assert "timing" not in doc


def test_gamma_volume_json(capsys):
    from linniklab.gamma import Instance, b_j_volume
    from linniklab.smoothing import kernel_new

    rc, out, _ = run(capsys, "gamma", "--mode", "volume", "--x", "100",
                     "--l1", "1", "--l2", "-1", "--l3", "-1", "--eta", "0",
                     "--eps", "20", "--lambda0", "0.5", "--k", "4")
    assert rc == 0
    doc = json.loads(out)
    inst = Instance(1.0, -1.0, -1.0, eta=0.0, eps=20.0, x=100.0, lambda0=0.5)
    want = b_j_volume(inst, kernel_new(20.0, 4), (50.0, 100.0))
    assert doc["b_j"] == pytest.approx(want, rel=1e-14)
    assert (doc["j_lo"], doc["j_hi"]) == (50.0, 100.0)


def test_triples_golden_and_determinism(capsys):
    argv = ["triples", "--l1", "1", "--l2", "-1", "--l3", "-1", "--eta", "0",
            "--eps", "0.5", "--x", "30", "--lambda0", "0.05"]
    with pytest.warns(UserWarning):
        rc, out1, _ = run(capsys, *argv)
    assert rc == 0 and out1 == TRIPLES_X30_GOLDEN
    with pytest.warns(UserWarning):
        rc, out2, _ = run(capsys, *argv, "--threads", "2")
    assert out2 == out1


def test_triples_named_coefficients_no_warning(capsys, recwarn):
    rc, out, _ = run(capsys, "triples", "--l1", "sqrt2", "--l2", "-1",
                     "--l3=-sqrt3", "--eta", "0", "--eps", "0.01",
                     "--x", "10000", "--lambda0", "0.5")
    assert rc == 0
    assert not [w for w in recwarn.list if issubclass(w.category, UserWarning)]
    lines = out.splitlines()
    assert lines[0] == "# p1\tp2\tp3\tx\ty\tresidual"
    assert len(lines) > 1
    p1, p2, p3, wx, wy, res = lines[1].split("\t")
    assert int(wx) ** 2 + int(wy) ** 2 + 1 == int(p3)
    assert abs(float(res)) < 0.01
    # the scan√2/√3 residual actually uses the certified named constants
    want = math.sqrt(2) * int(p1) - int(p2) - math.sqrt(3) * int(p3)
    assert abs(float(res) - want) < 1e-9


def test_linnik_golden(capsys):
    rc, out, _ = run(capsys, "linnik", "--x", "100")
    assert rc == 0 and out == LINNIK_X100_GOLDEN


def test_linnik_empirical(capsys):
    rc, out, _ = run(capsys, "linnik", "--x", "1000", "--empirical")
    assert rc == 0
    doc = json.loads(out)
    assert doc == {"x": 1000.0, "sum": 428,
                   "main_term": 387.105521657467, "ratio": 1.10564168180148}


def test_hooley_golden(capsys):
    rc, out, _ = run(capsys, "hooley", "--x", "100", "--stat", "sigma",
                     "--d", "5", "--lambda0", "0.1")
    assert rc == 0
    assert json.loads(out)["value"] == 13
    rc, out, _ = run(capsys, "hooley", "--x", "100", "--stat", "fomega",
                     "--omega", "10")
    assert rc == 0
    assert json.loads(out)["value"] == 25


def test_singular_json(capsys):
    rc, out, _ = run(capsys, "singular", "--pmax", "1000")
    assert rc == 0
    doc = json.loads(out)
    assert doc["linnik_constant"] == pytest.approx(4.0 * doc["f_zero"], rel=1e-14)
    assert doc["bracket_lo"] <= doc["n_s"] <= doc["bracket_hi"]
    rc, out, _ = run(capsys, "singular", "--pmax", "1000", "--dmax", "100",
                     "--checkpoints", "10,50,100")
    doc = json.loads(out)
    assert doc["chi_phi"][0] == [10, 0.75]
    assert len(doc["chi_phi"]) == 3


def test_exit_code_domain_errors(capsys):
    rc, _, err = run(capsys, "gamma", "--mode", "split", "--x", "1000",
                     "--l1", "1", "--l2", "-1", "--l3", "-1", "--eta", "0",
                     "--eps", "1", "--d", "900")
    assert rc == 2 and "error:" in err
    rc, _, err = run(capsys, "minorarc", "--x", "1000", "--a", "0", "--q", "5",
                     "--alpha", "0.01")
    assert rc == 2 and "major-arc" in err


def test_exit_code_resource_errors(capsys, monkeypatch):
    argv = ["gamma", "--mode", "sharp", "--x", "10000", "--l1", "1",
            "--l2", "-1", "--l3", "-1", "--eta", "0", "--eps", "1"]
    rc, _, err = run(capsys, *argv, "--work-budget", "100")
    assert rc == 3 and "budget" in err
    monkeypatch.setenv("LINNIKLAB_WORK_BUDGET", "100")
    rc, _, err = run(capsys, *argv)
    assert rc == 3
    # explicit flag outranks the environment
    rc, out, _ = run(capsys, *argv, "--work-budget", "100000000")
    assert rc == 0 and json.loads(out)["triple_count"] >= 0


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "lab.cfg"
    cfg.write_text("x = 1e5\nd = 100\neps = 0.01\nmode = desk\n")
    rc, out, _ = run(capsys, "schedule", "--config", str(cfg))
    assert rc == 0 and out.strip() == SCHEDULE_DESK_GOLDEN
    # explicit flag outranks the config value
    rc, out, _ = run(capsys, "schedule", "--config", str(cfg), "--eps", "0.5")
    assert json.loads(out)["eps"] == 0.5


def test_subprocess_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "linniklab", "eterm", "--x", "10", "--q", "1",
         "--a", "1"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == \
        '{"x": 10.0, "q": 1, "a": 1, "e_term": -4.65289246928253}'
    bad = subprocess.run(
        [sys.executable, "-m", "linniklab", "kernel", "--nope"],
        capture_output=True, text=True, timeout=120,
    )
    assert bad.returncode == 2
