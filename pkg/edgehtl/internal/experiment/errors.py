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
from ..errors import EdgeHTLError, ConfigurationError


__all__ = ["ExperimentError", "ExperimentConfigError"]


class ExperimentError(EdgeHTLError):
	"""Base class for all Experiment errors."""


class ExperimentConfigError(ExperimentError, ConfigurationError):
	def __init__(self, reason: str = "invalid settings"):
		super().__init__(f"Experiment configuration rejected: {reason}.")
