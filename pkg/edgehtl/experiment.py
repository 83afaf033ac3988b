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
from .internal.experiment.config import (
	ExperimentConfig,
	load_config,
	load_preset,
	list_presets
)
from .internal.experiment.runner import (
	ExperimentReport,
	run_experiment,
	run_sweep
)
from .internal.experiment.tables import (
	report_tables
)


__all__ = [
	"ExperimentConfig",
	"load_config",
	"load_preset",
	"list_presets",
	"ExperimentReport",
	"run_experiment",
	"run_sweep",
	"report_tables"
]
