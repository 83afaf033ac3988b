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
from pathlib import Path
from ..errors import EdgeHTLError, ConfigurationError


__all__ = [
	"DataError",
	"DataFormatError",
	"DataDimensionError",
	"PartitionError"
]


class DataError(EdgeHTLError):
	"""Base class for all Data errors."""


class DataFormatError(DataError):
	def __init__(self, file: str | Path = "<unknown>", reason: str = "unrecognized layout"):
		super().__init__(f"Dataset file '{Path(file).name}' is malformed: {reason}.")


class DataDimensionError(DataError):
	def __init__(self, expected: object = None, actual: object = None):
		super().__init__(f"Expected input of shape {expected}, but received shape {actual}.")


class PartitionError(DataError, ConfigurationError):
	def __init__(self, class_label: int = 0, needed: int = 0, available: int = 0):
		super().__init__(
			f"Class {class_label} has {available} samples, but the "
			f"partition specification needs {needed} of them."
		)
