from geocross.cli import main
from geocross.harness import RunConfig, write_config


def _cfg_file(tmp_path, **overrides):
    inst = tmp_path / "onemax.txt"
    inst.write_text("20\n")
    base = dict(
        problem="onemax",
        representation="binary",
        crossover="genotypic",
        population=16,
        generations=8,
        tournament_size=3,
        crossover_rate=0.9,
        mutation_rate=0.05,
        seed=11,
        instance=str(inst),
        output=str(tmp_path / "run.csv"),
    )
    base.update(overrides)
    path = tmp_path / "run.cfg"
    write_config(RunConfig(**base), path)
    return path


def test_cli_run(tmp_path, capsys):
    rc = main(["run", "--config", str(_cfg_file(tmp_path))])
    assert rc == 0
    out = capsys.readouterr().out
    assert "final best" in out
    body = (tmp_path / "run.csv").read_text()
    assert body.startswith("generation,best,mean,diversity_genotypic,diversity_quotient,ms")
    assert len(body.splitlines()) == 1 + 9


def test_cli_run_repeat_byte_identical(tmp_path):
    cfg = _cfg_file(tmp_path)
    main(["run", "--config", str(cfg)])
    first = (tmp_path / "run.csv").read_bytes()
    main(["run", "--config", str(cfg)])
    assert (tmp_path / "run.csv").read_bytes() == first


def test_cli_bench(tmp_path, capsys):
    cfg = _cfg_file(tmp_path, output=str(tmp_path / "bench.csv"))
    rc = main(["bench", "--config", str(cfg), "--seeds", "3", "--workers", "3"])
    assert rc == 0
    names = sorted(p.name for p in tmp_path.glob("bench_*.csv"))
    assert names == ["bench_aggregate.csv", "bench_seed11.csv", "bench_seed12.csv", "bench_seed13.csv"]
    agg = (tmp_path / "bench_aggregate.csv").read_text().splitlines()
    assert agg[0] == "generation,median_best"
    assert len(agg) == 1 + 9


def test_cli_verify_passes(capsys):
    rc = main(["verify", "--suite", "metric"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "[PASS]" in out and "[FAIL]" not in out


def test_cli_config_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("problem = onemax\n")
    rc = main(["run", "--config", str(bad)])
    assert rc == 2
    assert "error:" in capsys.readouterr().err
