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
__all__ = [
	"EdgeHTLError",
	"InvalidUsageError",
	"InvalidArgsError",
	"ConfigurationError"
]


class EdgeHTLError(Exception):
	"""Base class for all EdgeHTL errors."""


class InvalidUsageError(EdgeHTLError):
	def __init__(self, message: str = None):
		super().__init__(message or "Invalid usage of object.")


class InvalidArgsError(EdgeHTLError):
	def __init__(self, message: str = None):
		super().__init__(message or "Method received invalid arguments.")


class ConfigurationError(EdgeHTLError):
	def __init__(self, message: str = None):
		super().__init__(message or "The experiment configuration cannot be honored.")
