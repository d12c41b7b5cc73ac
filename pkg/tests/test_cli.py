"""End-to-end command-line tests, run in process through main()."""

import pytest

from dsair.cli import main


def test_stationary_to_stdout(capsys):
    rc = main(["stationary", "regime=peer", "commitments=true", "p_r=0.5"])
    captured = capsys.readouterr()
    assert rc == 0
    lines = captured.out.splitlines()
    assert lines[0] == "p_r,AS_in,AS_out,AU_in,AU_out,PS,unsafe_freq"
    assert lines[1].startswith("0.5,")


def test_unknown_key_exits_2_with_error_line(capsys):
    rc = main(["stationary", "bogus=1"])
    captured = capsys.readouterr()
    assert rc == 2
    assert captured.out == ""
    assert captured.err == "error: unknown key 'bogus'\n"


def test_invalid_value_reports_domain(capsys):
    rc = main(["payoffs", "s=0.9"])
    assert rc == 2
    assert capsys.readouterr().err == "error: s must exceed 1 (got 0.9)\n"


def test_config_file_with_cli_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("regime = peer\ncommitments = true\np_r = 0.2\n")
    rc = main(["stationary", "--config", str(cfg), "p_r=0.9"])
    assert rc == 0
    assert capsys.readouterr().out.splitlines()[1].startswith("0.9,")


def test_missing_config_file(capsys):
    rc = main(["payoffs", "--config", "/nonexistent/run.cfg"])
    assert rc == 2
    assert capsys.readouterr().err.startswith("error: cannot read config file")


def test_output_written_to_file_with_lf_endings(tmp_path):
    target = tmp_path / "out.csv"
    rc = main(["payoffs", f"output={target}"])
    assert rc == 0
    raw = target.read_bytes()
    assert b"\r" not in raw and raw.endswith(b"\n")
    assert raw.startswith(b"strategy,AS,AU\n")


def test_compare_is_sweep_only(capsys):
    rc = main(["stationary", "regime=peer", "commitments=true",
               "compare=true"])
    assert rc == 2
    assert "not supported by stationary" in capsys.readouterr().err


def test_sweep_requires_axis(capsys):
    rc = main(["sweep"])
    assert rc == 2
    assert "needs an axis" in capsys.readouterr().err


def test_sweep_pair_over_p_r(capsys):
    rc = main(["sweep", "regime=peer", "commitments=true", "compare=true",
               "axis=p_r:0.0:1.0:3", "outputs=unsafe_frequency"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "p_r,commit_unsafe_freq,nocommit_unsafe_freq"
    assert len(lines) == 4


def test_parallel_sweep_matches_serial(tmp_path):
    args = ["sweep", "regime=peer", "commitments=true", "compare=true",
            "axis=p_r:0.0:1.0:7"]
    serial, parallel = tmp_path / "serial.csv", tmp_path / "parallel.csv"
    assert main(args + [f"output={serial}"]) == 0
    assert main(args + [f"output={parallel}", "--workers", "4"]) == 0
    assert serial.read_bytes() == parallel.read_bytes()


def test_zones_rejects_foreign_axis(capsys):
    rc = main(["zones", "axis=beta:0.1:10.0:5"])
    assert rc == 2
    assert "zones supports only the axes s and p_r" in capsys.readouterr().err


def test_zones_default_grid_shape(capsys):
    rc = main(["zones", "axis=s:1.05:5.05:3", "axis2=p_r:0.0:1.0:5"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "s,p_r,zone,boundary_low,boundary_high"
    assert len(lines) == 1 + 3 * 5


def test_transitions_dot_output(capsys):
    rc = main(["transitions", "regime=peer", "commitments=true", "p_r=0.1"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph transitions {\n")
    assert '"PS" -> "AU-out"' in out


def test_abm_subcommand_runs(capsys):
    rc = main(["abm", "regime=peer", "commitments=true", "steps=5000",
               "seed=1"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "events,AS_in,AS_out,AU_in,AU_out,PS"
    assert lines[-1].startswith("5000,")


def test_reproduce_fig2_twice_is_byte_identical(tmp_path, capsys):
    first, second = tmp_path / "a", tmp_path / "b"
    assert main(["reproduce", "fig2", "--outdir", str(first)]) == 0
    assert main(["reproduce", "fig2", "--outdir", str(second)]) == 0
    capsys.readouterr()
    names = sorted(p.name for p in first.iterdir())
    assert names == sorted(p.name for p in second.iterdir())
    assert len(names) == 2
    for name in names:
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_reproduce_rejects_unknown_figure(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["reproduce", "fig99"])
    assert excinfo.value.code == 2
    assert "invalid choice" in capsys.readouterr().err
