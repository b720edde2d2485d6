import math

import pytest

import okp


def test_critical_value_and_opt():
    inst = okp.Instance([(5.0, 0.5), (1.0, 1.0)])
    info = okp.critical_value(inst)
    assert info["vhat"] == 1.0
    assert info["omegahat"] == 1.0
    assert info["opt"] == pytest.approx(3.0)


def test_prebuy_with_exact_prediction():
    inst = okp.Instance([(5.0, 0.5), (1.0, 1.0)], bounds=(1.0, 10.0))
    sol = okp.run("ppa", inst, okp.Prediction.point(1.0))
    assert sol.decisions == pytest.approx([0.5, 0.25])
    assert sol.profit == pytest.approx(2.75)
    assert sol.utilization == pytest.approx(0.75)


def test_threshold_needs_bounds():
    inst = okp.Instance([(2.0, 0.1)])
    with pytest.raises(okp.ConfigError):
        okp.run("ta", inst)


def test_generated_instance_runs_every_algorithm():
    [(label, inst)] = okp.generate("powerlaw", seed=7, params={"n": 300})
    assert label == ""
    assert len(inst) == 300
    opt = okp.critical_value(inst)["opt"]
    for spec in ["ta", "ppn", "ppb", "ppa", "ma:0.5:ppa"]:
        pred = None if spec == "ta" else okp.make_prediction(inst, "exact")
        sol = okp.run(spec, inst, pred)
        assert sol.utilization <= 1 + 1e-9
        assert okp.empirical_cr(sol.profit, opt) >= 1 - 1e-9
    sol = okp.run("ipa", inst, okp.make_prediction(inst, "width:25", seed=3))
    assert sol.utilization <= 1 + 1e-9


def test_threshold_function_endpoints():
    assert okp.ta_threshold(0.0, 1.0, 100.0) == 1.0
    assert okp.ta_threshold(1.0, 1.0, 100.0) == pytest.approx(100.0)


def test_csv_round_trip(tmp_path):
    inst = okp.Instance([(1.5, 0.25), (3.0, 0.125)], bounds=(1.0, 4.0))
    path = tmp_path / "i.csv"
    okp.write_instance_csv(path, inst)
    assert path.read_text() == "value,weight\n1.5,0.25\n3,0.125\n"
    back = okp.read_instance_csv(path, (1.0, 4.0))
    assert back.items == inst.items


def test_sweep_records(tmp_path):
    cfg = f"""
generate.kind = powerlaw
generate.count = 3
generate.n = 200
algorithms = ta, ppa, ppn
predictions = exact
out = {tmp_path}
"""
    records = okp.run_sweep(cfg)
    assert len(records) == 9
    assert all(r["error"] == "" for r in records)
    assert all(not math.isnan(r["ratio"]) for r in records)
    assert (tmp_path / "runs.csv").exists()


def test_bad_csv_is_data_error(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("value,weight\n1,abc\n")
    with pytest.raises(okp.DataError):
        okp.read_instance_csv(path)
