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


__all__ = ["ProtocolError"]


class ProtocolError(EdgeHTLError):
	def __init__(self, phase: str = "unknown", reason: str = "unspecified failure"):
		self.phase = phase
		super().__init__(f"Protocol failed during phase {phase}: {reason}.")
