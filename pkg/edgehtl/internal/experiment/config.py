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
import os
import yaml
import logging
from pathlib import Path
from typing import Any, Literal, Mapping, Optional
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from ..data.hog import HogConfig
from ..data.partition import PartitionSpec
from ..netsim.common import EncodingConfig
from ..proto.common import Procedure, ProtocolConfig
from ..proto.malice import MaliciousConfig
from ..proto.dynamic import DynamicConfig
from .. import utils
from . import errors


__all__ = [
	"ENV_MNIST_PATH",
	"ENV_HAPT_PATH",
	"ENV_OUT_DIR",
	"SweepAxis",
	"DatasetSection",
	"HoldoutSection",
	"SweepSection",
	"OutputSection",
	"ExperimentConfig",
	"load_config",
	"load_preset",
	"list_presets",
	"apply_env",
	"require_dataset",
	"override"
]


logger = logging.getLogger(__name__)

ENV_MNIST_PATH = "EDGEHTL_MNIST_PATH"
ENV_HAPT_PATH = "EDGEHTL_HAPT_PATH"
ENV_OUT_DIR = "EDGEHTL_OUT_DIR"

SweepAxis = Literal["num_aggregators", "f", "p", "s", "alpha"]

_FROZEN = ConfigDict(frozen=True, extra="forbid")


class DatasetSection(BaseModel):
	"""
	Where the samples come from. The synthetic fields apply to the
	`synthetic` kind only. `raw_dim` declares the dimensionality of the
	raw sensor data for the cloud comparison, by default 784 for MNIST
	and 1152 for HAPT. `subsample` keeps a seeded random subset of the
	loaded pool before any feature extraction.
	"""
	model_config = _FROZEN

	kind: Literal["synthetic", "mnist", "hapt"] = "synthetic"
	path: Optional[str] = None
	subsample: Optional[int] = Field(default=None, ge=1)
	num_classes: int = Field(default=4, ge=2)
	dim: int = Field(default=8, ge=2)
	per_class: int = Field(default=150, ge=1)
	separation: float = Field(default=3.0, ge=0.0)
	raw_dim: Optional[int] = Field(default=None, ge=1)
	hog: HogConfig = Field(default_factory=HogConfig)


class HoldoutSection(BaseModel):
	model_config = _FROZEN

	ratio: float = Field(default=0.3, gt=0.0, lt=1.0)
	runs: int = Field(default=1, ge=1)
	seed: int = 0


class SweepSection(BaseModel):
	model_config = _FROZEN

	axis: Optional[SweepAxis] = None
	values: tuple[float, ...] = ()


class OutputSection(BaseModel):
	model_config = _FROZEN

	dir: str = "results"
	plots: bool = False


class ExperimentConfig(BaseModel):
	"""
	Everything one experiment needs. Each entry of `procedures` runs
	with the shared `protocol` settings, its procedure field replaced.
	The malicious section switches corruption on, the dynamic section
	tunes the dynamic procedures.
	"""
	model_config = _FROZEN

	name: str = "experiment"
	procedures: tuple[Procedure, ...] = ("gtl", "nohtl_mu", "nohtl_mv")
	cloud: bool = True
	threads: int = Field(default=1, ge=1)
	dataset: DatasetSection = Field(default_factory=DatasetSection)
	partition: PartitionSpec = Field(default_factory=PartitionSpec)
	holdout: HoldoutSection = Field(default_factory=HoldoutSection)
	protocol: ProtocolConfig = Field(default_factory=ProtocolConfig)
	malicious: Optional[MaliciousConfig] = None
	dynamic: DynamicConfig = Field(default_factory=DynamicConfig)
	sweep: SweepSection = Field(default_factory=SweepSection)
	encoding: EncodingConfig = Field(default_factory=EncodingConfig)
	output: OutputSection = Field(default_factory=OutputSection)

	@model_validator(mode="after")
	def _check_consistency(self) -> "ExperimentConfig":
		if not self.procedures:
			raise ValueError("at least one procedure is required")
		aggregators = self.protocol.num_aggregators
		fixed_locations = self.dataset.kind != "hapt"
		if "gtl_limited" in self.procedures:
			if aggregators is None or aggregators < 1:
				raise ValueError("gtl_limited needs num_aggregators >= 1")
			if fixed_locations and aggregators > self.partition.num_locations:
				raise ValueError(
					f"num_aggregators ({aggregators}) exceeds the "
					f"{self.partition.num_locations} locations"
				)
		collector = self.protocol.collector_id
		if collector is not None and fixed_locations and not 0 <= collector < self.partition.num_locations:
			raise ValueError(f"collector_id {collector} is not a location")
		if self.sweep.axis is not None and not self.sweep.values:
			raise ValueError(f"sweep over {self.sweep.axis} has no values")
		return self

	@property
	def raw_dim(self) -> Optional[int]:
		if self.dataset.raw_dim is not None:
			return self.dataset.raw_dim
		return {"mnist": 784, "hapt": 1152}.get(self.dataset.kind)


def _validate(document: Mapping[str, Any], origin: str) -> ExperimentConfig:
	try:
		return ExperimentConfig.model_validate(document)
	except ValidationError as ex:
		issues = "; ".join(
			f"{'.'.join(str(p) for p in err['loc']) or origin}: {err['msg']}"
			for err in ex.errors()
		)
		raise errors.ExperimentConfigError(issues) from ex


def apply_env(config: ExperimentConfig, environ: Mapping[str, str] = None) -> ExperimentConfig:
	"""
	Overrides the dataset path and the output directory from the
	environment. Dataset paths apply to the matching dataset kind only.
	"""
	environ = os.environ if environ is None else environ
	updates: dict[str, Any] = {}
	env_path = {"mnist": ENV_MNIST_PATH, "hapt": ENV_HAPT_PATH}.get(config.dataset.kind)
	if env_path and environ.get(env_path):
		updates["dataset.path"] = environ[env_path]
	if environ.get(ENV_OUT_DIR):
		updates["output.dir"] = environ[ENV_OUT_DIR]
	return override(config, updates) if updates else config


def require_dataset(config: ExperimentConfig) -> None:
	"""
	:raises - errors.ExperimentConfigError: If a real dataset has no
		path or the path does not exist.
	"""
	section = config.dataset
	if section.kind == "synthetic":
		return
	if section.path is None:
		raise errors.ExperimentConfigError(f"dataset.path is required for {section.kind}")
	if not utils.resolve_relpath(section.path).exists():
		raise errors.ExperimentConfigError(f"dataset.path {section.path} does not exist")


def override(config: ExperimentConfig, updates: Mapping[str, Any]) -> ExperimentConfig:
	"""
	:param updates: Values keyed by dotted paths, like `holdout.seed`.
		A None value leaves the current setting in place.
	:return: A new, revalidated config.
	:raises - errors.ExperimentConfigError: If the result is invalid.
	"""
	document = config.model_dump(mode="python")
	for dotted, value in updates.items():
		if value is None:
			continue
		*parents, leaf = dotted.split(".")
		target = document
		for key in parents:
			if target.get(key) is None:
				target[key] = {}
			target = target[key]
		target[leaf] = value
	return _validate(document, "override")


def load_config(path: str | Path, environ: Mapping[str, str] = None) -> ExperimentConfig:
	"""
	Reads an experiment config from a YAML file. Relative dataset and
	output paths stay relative to the working directory.

	:raises - errors.ExperimentConfigError: If the file is missing,
		not valid YAML or describes an invalid experiment.
	"""
	path = utils.resolve_relpath(path)
	if not path.is_file():
		raise errors.ExperimentConfigError(f"config file {path} does not exist")
	try:
		document = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
	except yaml.YAMLError as ex:
		raise errors.ExperimentConfigError(f"{path.name} is not valid YAML") from ex
	if not isinstance(document, dict):
		raise errors.ExperimentConfigError(f"{path.name} must hold a mapping")
	logger.debug("Loaded config file %s", path)
	return apply_env(_validate(document, path.name), environ)


def _presets_dir() -> Path:
	return Path(__file__).resolve().parents[2] / "presets"


def list_presets() -> list[str]:
	return sorted(file.stem for file in _presets_dir().glob("*.yaml"))


def load_preset(name: str, environ: Mapping[str, str] = None) -> ExperimentConfig:
	file = _presets_dir() / f"{name}.yaml"
	if not file.is_file():
		raise errors.ExperimentConfigError(
			f"unknown preset '{name}', choose one of: {', '.join(list_presets())}"
		)
	return load_config(file, environ)
