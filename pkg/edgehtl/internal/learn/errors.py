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
from ..errors import EdgeHTLError


__all__ = [
	"LearnError",
	"NumericError",
	"FeatureSpaceError",
	"ModelRecordError"
]


class LearnError(EdgeHTLError):
	"""Base class for all Learn errors."""


class NumericError(LearnError):
	def __init__(self, what: str = "input"):
		super().__init__(f"Encountered non-finite values in {what}.")


class FeatureSpaceError(LearnError):
	def __init__(self, expected: object = None, actual: object = None):
		super().__init__(f"Model expects feature space {expected}, but received {actual}.")


class ModelRecordError(LearnError):
	def __init__(self, reason: str = "unrecognized layout"):
		super().__init__(f"Cannot decode model record: {reason}.")
