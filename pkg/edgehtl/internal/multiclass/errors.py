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


__all__ = ["MulticlassError", "MixedFeatureSpaceError"]


class MulticlassError(EdgeHTLError):
	"""Base class for all Multiclass errors."""


class MixedFeatureSpaceError(MulticlassError):
	def __init__(self, spaces: object = None):
		super().__init__(f"Cannot combine models of different feature spaces: {spaces}.")
