import csv
import subprocess
import sys

import numpy as np
import pytest

from se3tangent import cli, kernels


def _read(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))
    return rows[0], np.array(rows[1:], dtype=float)


def test_errors_csv(tmp_path):
    out = tmp_path / "e.csv"
    assert cli.main(["errors", "--samples", "11", "--out", str(out), "--targets", "dexp=0,1", "ddexpinv=0,3"]) == 0
    header, data = _read(out)
    assert header == ["s", "dexp_k0", "dexp_k1", "ddexpinv_k0", "ddexpinv_k3"]
    assert data.shape == (11, 5)
    assert np.all(data[0, 1:] == 0.0)
    assert np.all(data[1:, 1:] > 0.0)
    assert data[-1, 0] == pytest.approx(0.1)


def test_errors_default_targets_and_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        cli.main(["errors", "--log", "--s-min", "1e-3", "--samples", "5", "--out", str(p)])
    assert a.read_bytes() == b.read_bytes()
    header, data = _read(a)
    assert len(header) == 1 + sum(len(k) for _, k in cli.DEFAULT_TARGETS)
    assert data[0, 0] == pytest.approx(1e-3)


def test_sweep_point_orders():
    errs = [cli.sweep_point("ddexp", k, 1e-2) for k in range(4)]
    assert errs == sorted(errs, reverse=True)
    assert cli.sweep_point("hessian_dexpinv", 0, 0.0) == 0.0


def test_parse_targets():
    assert cli.parse_targets(["dexp=0,2", "d2dexp=1"]) == (("dexp", (0, 2)), ("d2dexp", (1,)))
    for bad in (["dexp"], ["dexp="], ["dexp=a"]):
        with pytest.raises(ValueError):
            cli.parse_targets(bad)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"s_min": 0.1, "s_max": 0.1},
        {"samples": 1},
        {"log": True, "s_min": 0.0},
        {"targets": (("dlog", (0,)),)},
        {"targets": (("d2dexpinv", (1,)),)},
        {"targets": (("dexp", (9,)),)},
    ],
)
def test_sweep_spec_validation(kwargs):
    with pytest.raises(ValueError):
        cli.SweepSpec(**kwargs)


def test_rod_command(tmp_path):
    assert cli.main(["rod", "--tau-samples", "5", "--out-dir", str(tmp_path)]) == 0
    header, data = _read(tmp_path / "rod.csv")
    assert data.shape == (5, len(header))
    assert header[0] == "tau" and "hess_norm_robust" in header
    robust = [i for i, h in enumerate(header) if h.endswith("_robust")]
    assert np.all(np.isfinite(data[:, robust]))
    chi = [header.index(f"chi_{c}_robust") for c in ("rho_x", "rho_y", "rho_z")]
    assert np.allclose(np.linalg.norm(data[:, chi], axis=1), 1.0)
    for eps in ("1e-02", "1e-03"):
        h, d = _read(tmp_path / f"switch_eps{eps}.csv")
        assert h == ["tau", "err_k0", "err_k1", "err_k2", "err_k3"]
        assert d.shape[0] == 201


def test_check_passes(capsys):
    assert cli.main(["check", "--verbose"]) == 0
    out = capsys.readouterr().out
    assert f"{len(cli.SUITES)}/{len(cli.SUITES)} suites passed" in out
    assert "FAIL" not in out


def test_check_detects_broken_kernel(monkeypatch, capsys):
    original = kernels.dexp_coeff_derivs

    def broken(*args, **kwargs):
        out = original(*args, **kwargs)
        return out._replace(abar2=out.abar2 * (1 + 1e-6))

    monkeypatch.setattr(kernels, "dexp_coeff_derivs", broken)
    assert cli.main(["check"]) == 1
    assert "FAIL" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["errors", "--samples", "1"],
        ["errors", "--targets", "nonsense=1"],
        ["rod", "--tau-samples", "1"],
        ["rod", "--L", "-1"],
        ["rod", "--epsilon", "0"],
    ],
)
def test_bad_arguments_exit_2(argv, tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main([*argv, *(["--out-dir", str(tmp_path)] if argv[0] == "rod" else ["--out", str(tmp_path / "x.csv")])])
    assert exc.value.code == 2
    assert "error" in capsys.readouterr().err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "se3tangent", "--help"], capture_output=True, text=True)
    assert res.returncode == 0 and "errors" in res.stdout and "check" in res.stdout
