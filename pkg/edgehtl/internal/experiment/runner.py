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
from __future__ import annotations
import orjson
import logging
import platform
import numpy as np
import pandas as pd
from pathlib import Path
from dotmap import DotMap
from dataclasses import dataclass, field
from importlib import metadata
from typing import Any, Callable, Optional, Sequence
from ..data.common import LocalDataset, SamplePool
from ..data.hog import hog_batch
from ..data.mnist import load_mnist
from ..data.hapt import hapt_redistribute, load_hapt
from ..data.holdout import holdout
from ..data.partition import partition
from ..data.synth import synth_blobs
from ..metrics.report import MetricsReport
from ..metrics.scores import evaluate
from ..netsim.formulas import overhead_bound, reconcile, to_megabytes
from ..netsim.common import Phase
from ..netsim.ledger import OverheadLedger
from ..proto.cloud import CloudBaseline, train_cloud
from ..proto.dynamic import arrival_stream, run_dynamic
from ..proto.malice import run_with_malice
from ..proto.runner import run_protocol
from .. import utils
from .config import ExperimentConfig, SweepAxis, override, require_dataset
from . import errors


__all__ = [
	"METRICS_FILE",
	"OVERHEAD_FILE",
	"SUMMARY_FILE",
	"SWEEP_FIELDS",
	"ExperimentReport",
	"load_dataset",
	"place_locations",
	"run_experiment",
	"sweep_configs",
	"run_sweep"
]


logger = logging.getLogger(__name__)

METRICS_FILE = "metrics.csv"
OVERHEAD_FILE = "overhead.csv"
SUMMARY_FILE = "summary.json"

STAGE_RUN = 23
STAGE_SUBSAMPLE = 29

SWEEP_FIELDS: dict[str, str] = {
	"num_aggregators": "protocol.num_aggregators",
	"f": "malicious.node_fraction",
	"p": "malicious.param_probability",
	"s": "partition.num_locations",
	"alpha": "dynamic.alpha"
}

Progress = Callable[[str], None]


def _versions() -> dict[str, str]:
	out = {"python": platform.python_version()}
	for package in ("edgehtl", "numpy", "scipy", "pandas", "pydantic"):
		try:
			out[package] = metadata.version(package)
		except metadata.PackageNotFoundError:
			out[package] = "unknown"
	return out


@dataclass(eq=False)
class ExperimentReport:
	"""
	Results of an experiment or a sweep: long-format metrics, every
	metered message, and per run and procedure the overhead totals,
	their reconciliation with the formulas and the dynamic phases.
	"""
	config: ExperimentConfig
	metrics: MetricsReport = field(default_factory=MetricsReport)
	overhead: list[pd.DataFrame] = field(default_factory=list)
	totals: list[dict] = field(default_factory=list)
	reconciliation: list[dict] = field(default_factory=list)
	dynamic: list[dict] = field(default_factory=list)

	def add_ledger(self, ledger: OverheadLedger, **keys: Any) -> None:
		frame = ledger.to_frame()
		for key, value in keys.items():
			frame[key] = value
		self.overhead.append(frame)

	def extend(self, other: ExperimentReport, **keys: Any) -> None:
		self.metrics.extend(other.metrics, **keys)
		for frame in other.overhead:
			frame = frame.copy()
			for key, value in keys.items():
				frame[key] = value
			self.overhead.append(frame)
		for target, rows in (
				(self.totals, other.totals),
				(self.reconciliation, other.reconciliation),
				(self.dynamic, other.dynamic)
		):
			target.extend({**row, **keys} for row in rows)

	def overhead_frame(self) -> pd.DataFrame:
		frames = [frame for frame in self.overhead if not frame.empty]
		if not frames:
			return pd.DataFrame(columns=["sequence", "phase", "src", "dst", "class_label", "count", "bytes"])
		return pd.concat(frames, ignore_index=True)

	def summary(self) -> dict:
		by = ["procedure", "step"]
		if "axis_value" in self.metrics.to_frame().columns:
			by = ["axis", "axis_value", *by]
		return {
			"name": self.config.name,
			"versions": _versions(),
			"config": self.config.model_dump(mode="json"),
			"f_measure": self.metrics.summary("f_measure", by=by),
			"ppg": self.metrics.summary("ppg", by=by),
			"overhead": self.totals,
			"reconciliation": self.reconciliation,
			"dynamic": self.dynamic
		}

	def write(self, directory: str | Path) -> DotMap:
		directory = Path(directory)
		directory.mkdir(parents=True, exist_ok=True)
		paths = DotMap(
			metrics=self.metrics.to_csv(directory / METRICS_FILE),
			overhead=directory / OVERHEAD_FILE,
			summary=directory / SUMMARY_FILE
		)
		self.overhead_frame().to_csv(paths.overhead, index=False)
		paths.summary.write_bytes(orjson.dumps(
			self.summary(),
			option=orjson.OPT_INDENT_2 | orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_NON_STR_KEYS
		))
		logger.info("Wrote experiment results to %s", directory)
		return paths

	@staticmethod
	def read(directory: str | Path) -> DotMap:
		"""
		:raises - errors.ExperimentError: If the directory does not
			hold the output files of a run.
		"""
		directory = Path(directory)
		files = [directory / name for name in (METRICS_FILE, OVERHEAD_FILE, SUMMARY_FILE)]
		missing = [file.name for file in files if not file.is_file()]
		if missing:
			raise errors.ExperimentError(f"Missing result files in {directory}: {', '.join(missing)}.")
		return DotMap(
			metrics=MetricsReport.read_csv(files[0]),
			overhead=pd.read_csv(files[1]),
			summary=orjson.loads(files[2].read_bytes())
		)


def _subsample(pool: SamplePool, count: Optional[int], seed: int) -> np.ndarray:
	if count is None or count >= len(pool):
		return np.arange(len(pool))
	rng = utils.derive_rng(seed, STAGE_SUBSAMPLE)
	return np.sort(rng.choice(len(pool), size=count, replace=False))


def load_dataset(config: ExperimentConfig) -> SamplePool:
	"""
	Loads the configured dataset as one pool. MNIST digits are turned
	into HOG descriptors, HAPT keeps its user ids in the pool groups.

	:raises - errors.ExperimentConfigError: If a real dataset has no
		path or the path does not exist.
	"""
	section = config.dataset
	seed = config.holdout.seed
	if section.kind == "synthetic":
		pool = synth_blobs(
			section.num_classes, section.dim, section.per_class,
			section.separation, seed
		)
		return pool.subset(_subsample(pool, section.subsample, seed))
	require_dataset(config)
	if section.kind == "mnist":
		pool, images = load_mnist(section.path)
		keep = _subsample(pool, section.subsample, seed)
		features = hog_batch(images[keep], section.hog)
		return SamplePool(X=features, y=pool.y[keep], num_classes=pool.num_classes)
	pool = load_hapt(section.path)
	return pool.subset(_subsample(pool, section.subsample, seed))


def place_locations(train: SamplePool, config: ExperimentConfig, seed: int) -> list[LocalDataset]:
	if config.dataset.kind == "hapt":
		return hapt_redistribute(train, seed)
	return partition(train, config.partition.model_copy(update={"seed": seed}))


def _overhead_totals(
		ledger: OverheadLedger,
		config: ExperimentConfig,
		cloud: Optional[CloudBaseline],
		s: int,
		k: int
) -> dict:
	count = ledger.count()
	d0 = ledger.mean_count(Phase.STEP1, Phase.COLLECTOR_UP)
	row = dict(
		s=s,
		messages=ledger.messages(),
		count=count,
		bytes=ledger.bytes(),
		megabytes=to_megabytes(count, config.encoding.bytes_per_coeff),
		bound=overhead_bound(s, k, d0) if s >= 2 else None
	)
	if cloud is not None:
		row.update(cloud=cloud.overhead, cloud_raw=cloud.raw_overhead, **cloud.gains(count))
	return row


def _run_static(
		procedure: str,
		datasets: list[LocalDataset],
		test: SamplePool,
		config: ExperimentConfig,
		report: ExperimentReport,
		cloud: Optional[CloudBaseline],
		run: int,
		seed: int
) -> None:
	protocol = config.protocol.model_copy(update={
		"procedure": procedure, "seed": seed, "workers": config.threads
	})
	if config.malicious is not None:
		outcome = run_with_malice(datasets, protocol, config.malicious, config.encoding)
		result = outcome.corrupted
		for step, delta in sorted(outcome.delta(test).items()):
			report.metrics.add(run, procedure, None, step, "f_delta", delta)
	else:
		result = run_protocol(datasets, protocol, config.encoding)

	result.evaluate(test, run, report.metrics)
	s, k = len(datasets), test.num_classes
	aggregators = len(result.aggregators) if procedure == "gtl_limited" else None
	report.add_ledger(result.ledger, run=run, procedure=procedure)
	report.totals.append(dict(run=run, procedure=procedure, **_overhead_totals(result.ledger, config, cloud, s, k)))
	report.reconciliation.extend(
		dict(run=run, procedure=procedure, **row)
		for row in reconcile(result.ledger, procedure, s, k, aggregators)
	)


def _run_dynamic(
		procedure: str,
		datasets: list[LocalDataset],
		test: SamplePool,
		config: ExperimentConfig,
		report: ExperimentReport,
		run: int,
		seed: int
) -> None:
	protocol = config.protocol.model_copy(update={
		"procedure": procedure, "seed": seed, "workers": config.threads
	})
	dynamic = config.dynamic.model_copy(update={"seed": seed})
	stream = arrival_stream(datasets, dynamic.batch_size, seed)
	result = run_dynamic(stream, dynamic, protocol, encoding=config.encoding)
	result.evaluate(test, run, report.metrics)
	report.add_ledger(result.ledger, run=run, procedure=procedure)
	for phase, row in zip(result.phases, result.per_phase()):
		rows = reconcile(phase.ledger, procedure, len(phase.node_ids), test.num_classes)
		row.update(run=run, procedure=procedure, exact=all(r["exact"] for r in rows))
		report.dynamic.append(row)
	report.totals.append(dict(
		run=run,
		procedure=procedure,
		s=len(datasets),
		messages=result.ledger.messages(),
		count=result.ledger.count(),
		bytes=result.ledger.bytes(),
		megabytes=to_megabytes(result.ledger.count(), config.encoding.bytes_per_coeff),
		mean_phase_count=result.mean_phase_overhead()
	))


def run_experiment(config: ExperimentConfig, progress: Progress = None) -> ExperimentReport:
	"""
	Runs every configured procedure on `holdout.runs` independent
	holdout splits. Each run derives its own seed, reserves the test
	set before the training pool is spread over the locations and
	scores the local, transfer, aggregated and cloud classifiers.

	:param config: The experiment to run.
	:param progress: Callback receiving a short message per stage.
	:return: The collected results.
	"""
	progress = progress or (lambda message: None)
	pool = load_dataset(config)
	report = ExperimentReport(config=config)

	for run in range(config.holdout.runs):
		seed = utils.derive_seed(config.holdout.seed, STAGE_RUN, run)
		split = holdout(pool, config.holdout.ratio, seed)
		datasets = place_locations(split.train, config, seed)
		logger.info("Run %d: %d locations, %d test samples", run, len(datasets), len(split.test))

		cloud = None
		if config.cloud:
			progress(f"run {run}: cloud baseline")
			cloud = train_cloud(datasets, config.protocol.svm, seed, config.raw_dim)
			scores = evaluate(cloud.predict(split.test.X), split.test.y, split.test.num_classes)
			report.metrics.add_scores(run, "cloud", None, "cloud", scores)

		for procedure in config.procedures:
			progress(f"run {run}: {procedure}")
			if procedure.startswith("dyn_"):
				_run_dynamic(procedure, datasets, split.test, config, report, run, seed)
			else:
				_run_static(procedure, datasets, split.test, config, report, cloud, run, seed)
	return report


def sweep_configs(
		config: ExperimentConfig,
		axis: SweepAxis = None,
		values: Sequence[float] = None
) -> list[tuple[float, ExperimentConfig]]:
	"""
	Expands one config into one config per sweep value. Sweeping the
	malicious fraction or probability switches on the matching mode.

	:raises - errors.ExperimentConfigError: Without an axis or values,
		or if a swept value makes the config invalid.
	"""
	axis = axis or config.sweep.axis
	values = tuple(values) if values else config.sweep.values
	if axis is None or not values:
		raise errors.ExperimentConfigError("a sweep needs an axis and at least one value")
	out = []
	for value in values:
		if axis in ("num_aggregators", "s"):
			value = int(value)
		updates: dict[str, Any] = {SWEEP_FIELDS[axis]: value}
		if axis == "f":
			updates["malicious.mode"] = "malicious1"
		elif axis == "p":
			updates["malicious.mode"] = "malicious2"
		out.append((value, override(config, updates)))
	return out


def run_sweep(
		config: ExperimentConfig,
		axis: SweepAxis = None,
		values: Sequence[float] = None,
		progress: Progress = None
) -> ExperimentReport:
	axis = axis or config.sweep.axis
	report = ExperimentReport(config=config)
	for value, swept in sweep_configs(config, axis, values):
		logger.info("Sweep %s = %s", axis, value)
		report.extend(run_experiment(swept, progress), axis=axis, axis_value=value)
	return report
