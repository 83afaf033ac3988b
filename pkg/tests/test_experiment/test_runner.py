#
#   MIT License
#
#   Copyright (c) 2024, Mattias Aabmets
#
#   The contents of this file are subject to the terms and conditions defined in the License.
#   You may not use, modify, or distribute this file except in compliance with the License.
#
#   SPDX-License-Identifier: MIT
#
import pytest
from pathlib import Path
from edgehtl.internal.experiment.errors import ExperimentConfigError, ExperimentError
from edgehtl.internal.netsim.formulas import overhead_bound
from edgehtl.internal.experiment.runner import (
	METRICS_FILE,
	load_dataset,
	place_locations,
	sweep_configs
)
from edgehtl.experiment import (
	ExperimentConfig,
	ExperimentReport,
	run_experiment,
	run_sweep
)


def _config(**changes) -> ExperimentConfig:
	document = dict(
		name="tiny",
		procedures=["gtl", "gtl_limited", "nohtl_mu", "nohtl_mv"],
		dataset=dict(kind="synthetic", num_classes=3, dim=4, per_class=40, separation=4.0),
		partition=dict(regime="balanced", num_locations=3),
		holdout=dict(ratio=0.25, runs=2, seed=5),
		protocol=dict(
			num_aggregators=2,
			svm=dict(max_epochs=50),
			greedy=dict(kappa=4, bag_size=20, bag_count=2)
		)
	)
	document.update(changes)
	return ExperimentConfig.model_validate(document)


@pytest.fixture(name="report", scope="module")
def fixture_report() -> ExperimentReport:
	return run_experiment(_config())


def test_load_and_place(tmp_path: Path):
	config = _config()
	pool = load_dataset(config)
	assert len(pool) == 3 * 40
	assert pool.dim == 4
	datasets = place_locations(pool, config, seed=1)
	assert [ds.location_id for ds in datasets] == [0, 1, 2]
	assert sum(ds.n_l for ds in datasets) == len(pool)

	subsampled = load_dataset(_config(dataset=dict(kind="synthetic", num_classes=3, dim=4, per_class=40, subsample=50)))
	assert len(subsampled) == 50

	with pytest.raises(ExperimentConfigError, match="dataset.path"):
		load_dataset(_config(dataset=dict(kind="mnist")))
	with pytest.raises(ExperimentConfigError, match="does not exist"):
		load_dataset(_config(dataset=dict(kind="hapt", path=str(tmp_path / "missing"))))


def test_experiment_scores(report: ExperimentReport):
	frame = report.metrics.to_frame()
	assert set(frame["procedure"]) == {"cloud", "gtl", "gtl_limited", "nohtl_mu", "nohtl_mv"}
	assert set(frame["run"]) == {0, 1}
	assert set(frame.loc[frame["procedure"] == "cloud", "step"]) == {"cloud"}
	assert {"h0", "h2", "h4_mean"} <= set(frame.loc[frame["procedure"] == "gtl", "step"])
	assert "ppg" in set(frame["metric"])

	cloud_f = frame.query("procedure == 'cloud' and metric == 'f_measure'")["value"]
	assert (cloud_f > 0.8).all()


def test_experiment_overhead(report: ExperimentReport):
	assert len(report.totals) == 2 * 4
	for row in report.totals:
		assert row["s"] == 3
		assert row["count"] > 0
		assert row["cloud"] > 0
		assert row["gain_raw"] is None
		assert row["bound"] >= row["count"] or row["procedure"] == "gtl_limited"

	assert report.reconciliation
	assert all(row["exact"] for row in report.reconciliation)
	totals = [row for row in report.reconciliation if row["phase"] == "total"]
	assert len(totals) == 2 * 4

	frame = report.overhead_frame()
	assert {"run", "procedure", "phase", "count"} <= set(frame.columns)
	assert frame["count"].sum() == pytest.approx(sum(row["count"] for row in report.totals))


def test_overhead_bound_uses_first_round_size(report: ExperimentReport):
	frame = report.overhead_frame()
	first_round = frame[frame["phase"].isin(["step1", "collector_up"])]
	sizes = first_round.groupby(["run", "procedure"])["count"].mean()
	for row in report.totals:
		d0 = float(sizes[(row["run"], row["procedure"])])
		assert row["bound"] == pytest.approx(overhead_bound(row["s"], 3, d0))


def test_progress_messages():
	messages = []
	run_experiment(_config(procedures=["nohtl_mu"], holdout=dict(runs=1)), messages.append)
	assert messages == ["run 0: cloud baseline", "run 0: nohtl_mu"]


def test_write_and_read(report: ExperimentReport, tmp_path: Path):
	paths = report.write(tmp_path / "out")
	assert all(path.is_file() for path in paths.values())

	loaded = ExperimentReport.read(tmp_path / "out")
	assert set(loaded.keys()) == {"metrics", "overhead", "summary"}
	assert len(loaded.metrics) == len(report.metrics)
	assert len(loaded.overhead) == len(report.overhead_frame())
	assert loaded.summary["name"] == "tiny"
	assert loaded.summary["config"]["partition"]["num_locations"] == 3
	assert "python" in loaded.summary["versions"]
	steps = {(row["procedure"], row["step"]) for row in loaded.summary["f_measure"]}
	assert ("gtl", "h0") in steps
	assert ("cloud", "cloud") in steps


def test_read_missing_files(tmp_path: Path):
	with pytest.raises(ExperimentError, match=METRICS_FILE):
		ExperimentReport.read(tmp_path)


def test_malicious_experiment():
	config = _config(
		procedures=["gtl"],
		holdout=dict(ratio=0.25, runs=1, seed=5),
		malicious=dict(mode="malicious1", node_fraction=0.67)
	)
	frame = run_experiment(config).metrics.to_frame()
	deltas = frame[frame["metric"] == "f_delta"]
	assert {"h0", "h2"} <= set(deltas["step"])
	h0 = deltas.loc[deltas["step"] == "h0", "value"]
	assert h0.abs().max() == pytest.approx(0.0)


def test_transfer_resists_corrupted_half():
	config = _config(
		procedures=["gtl", "nohtl_mu"],
		cloud=False,
		dataset=dict(kind="synthetic", num_classes=3, dim=6, per_class=60, separation=4.0),
		partition=dict(regime="balanced", num_locations=4),
		holdout=dict(ratio=0.25, runs=2, seed=5),
		malicious=dict(mode="malicious1", node_fraction=0.5, seed=3)
	)
	frame = run_experiment(config).metrics.to_frame()
	final = frame[frame["step"] == "h4_mean"]
	scores = final[final["metric"] == "f_measure"].groupby("procedure")["value"].mean()
	deltas = final[final["metric"] == "f_delta"].groupby("procedure")["value"].mean()
	assert scores["gtl"] > scores["nohtl_mu"]
	assert deltas["gtl"] > deltas["nohtl_mu"]
	assert deltas["nohtl_mu"] < 0.0


def test_dynamic_experiment():
	config = _config(
		procedures=["dyn_gtl", "dyn_nohtl"],
		cloud=False,
		partition=dict(regime="balanced", num_locations=5),
		holdout=dict(ratio=0.25, runs=1, seed=5),
		dynamic=dict(batch_size=2)
	)
	report = run_experiment(config)
	assert len(report.dynamic) == 2 * 3
	assert [row["nodes"] for row in report.dynamic if row["procedure"] == "dyn_nohtl"] == [2, 2, 1]
	assert all(row["exact"] for row in report.dynamic if row["procedure"] == "dyn_nohtl")
	assert all("mean_phase_count" in row for row in report.totals)
	assert report.reconciliation == []

	frame = report.metrics.to_frame()
	assert set(frame["step"]) == {"m"}
	assert set(frame["procedure"]) == {"dyn_gtl", "dyn_nohtl"}


def test_sweep_configs():
	config = _config()
	swept = sweep_configs(config, "num_aggregators", [1, 3.0])
	assert [value for value, _ in swept] == [1, 3]
	assert [cfg.protocol.num_aggregators for _, cfg in swept] == [1, 3]

	swept = sweep_configs(config, "p", [0.5])
	assert swept[0][1].malicious.mode == "malicious2"
	assert swept[0][1].malicious.param_probability == 0.5

	with pytest.raises(ExperimentConfigError, match="axis"):
		sweep_configs(config)
	with pytest.raises(ExperimentConfigError):
		sweep_configs(config, "num_aggregators", [4])


def test_run_sweep():
	config = _config(procedures=["nohtl_mu"], cloud=False, holdout=dict(ratio=0.25, runs=1, seed=5))
	report = run_sweep(config, "s", [2, 3])

	frame = report.metrics.to_frame()
	assert set(frame["axis"]) == {"s"}
	assert set(frame["axis_value"]) == {2, 3}
	assert [(row["axis_value"], row["s"]) for row in report.totals] == [(2, 2), (3, 3)]

	summary = report.summary()
	assert all("axis_value" in row for row in summary["f_measure"])
