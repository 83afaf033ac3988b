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
import os
import pytest
import pandas as pd
from edgehtl.internal.experiment.config import ENV_HAPT_PATH, ENV_MNIST_PATH, override
from edgehtl.experiment import load_preset, run_experiment


pytestmark = pytest.mark.heavy

needs_mnist = pytest.mark.skipif(not os.environ.get(ENV_MNIST_PATH), reason=f"{ENV_MNIST_PATH} is not set")
needs_hapt = pytest.mark.skipif(not os.environ.get(ENV_HAPT_PATH), reason=f"{ENV_HAPT_PATH} is not set")


def _scores(preset: str, **updates) -> pd.DataFrame:
	config = override(load_preset(preset), {"holdout.runs": 1, **updates})
	return run_experiment(config).metrics.to_frame()


def _mean(frame: pd.DataFrame, procedure: str, step: str, metric: str = "f_measure") -> float:
	rows = frame[(frame["procedure"] == procedure) & (frame["step"] == step) & (frame["metric"] == metric)]
	return rows["value"].mean()


@needs_mnist
def test_mnist_balanced_procedures_agree():
	frame = _scores("mnist_balanced")
	gtl = _mean(frame, "gtl", "h4_mean")
	nohtl = _mean(frame, "nohtl_mu", "h4_mean")
	cloud = _mean(frame, "cloud", "cloud")
	assert max(gtl, nohtl, cloud) - min(gtl, nohtl, cloud) <= 0.05


@needs_mnist
def test_mnist_class_unbalance_favours_transfer():
	frame = _scores("mnist_class_unbalance")
	assert _mean(frame, "gtl", "h4_mean") >= _mean(frame, "nohtl_mu", "h4_mean")


@needs_mnist
def test_mnist_node_unbalance_lifts_every_location():
	frame = _scores("mnist_node_unbalance")
	for procedure in ("gtl", "nohtl_mu"):
		assert _mean(frame, procedure, "h4_mean") >= _mean(frame, procedure, "h0") + 0.15
		gains = frame.query(f"procedure == '{procedure}' and step == 'h4_mean' and metric == 'ppg'")
		assert (gains["value"] > 0).all()


@needs_mnist
def test_mnist_malicious_nodes():
	frame = _scores("mnist_malicious1")
	assert _mean(frame, "gtl", "h4_mean", "f_delta") > -0.05
	assert _mean(frame, "nohtl_mu", "h4_mean", "f_delta") < -0.25


@needs_hapt
def test_hapt_full_scale():
	frame = _scores("hapt")
	assert _mean(frame, "gtl", "h4_mean") == pytest.approx(0.95, abs=0.03)
	assert _mean(frame, "nohtl_mu", "h4_mean") == pytest.approx(0.92, abs=0.03)


@needs_hapt
def test_hapt_dynamic_converges():
	config = override(load_preset("hapt_dynamic"), {"procedures": ["dyn_nohtl"], "cloud": False})
	report = run_experiment(config)
	frame = report.metrics.to_frame()
	final = frame[(frame["metric"] == "f_measure") & (frame["phase"] == frame["phase"].max())]["value"].mean()

	static = _scores("hapt", procedures=["nohtl_mu"], cloud=False)
	assert final == pytest.approx(_mean(static, "nohtl_mu", "h4_mean"), abs=0.02)
	assert all(row["gain"] > 0.8 for row in report.dynamic if not row["skipped"])
