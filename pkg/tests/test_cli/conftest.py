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
from dotmap import DotMap


TINY_EXPERIMENT = """\
name: tiny
procedures: [gtl, nohtl_mu]
dataset:
  kind: synthetic
  num_classes: 3
  dim: 4
  per_class: 40
  separation: 4.0
partition:
  num_locations: 3
holdout:
  ratio: 0.25
  runs: 1
protocol:
  svm:
    max_epochs: 50
  greedy:
    kappa: 4
    bag_size: 20
    bag_count: 2
"""


@pytest.fixture(name="cli_message", scope="package")
def fixture_cli_message() -> DotMap:
	return DotMap(
		success="Operation successful!",
		dry_run="DRY RUN MODE",
		config_error="EdgeHTL Configuration Error",
		error="EdgeHTL Error"
	)


@pytest.fixture(name="config_file")
def fixture_config_file(tmp_path: Path) -> Path:
	path = tmp_path / "tiny.yaml"
	path.write_text(TINY_EXPERIMENT, encoding="utf-8")
	return path
