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
	"NetsimError",
	"RoutingError",
	"NodeOfflineError",
	"EgressViolationError"
]


class NetsimError(EdgeHTLError):
	"""Base class for all Netsim errors."""


class RoutingError(NetsimError):
	def __init__(self, src: int = None, dst: int = None, reason: str = "unknown endpoint"):
		super().__init__(f"Cannot route a message from node {src} to node {dst}: {reason}.")


class NodeOfflineError(NetsimError):
	def __init__(self, node: int = None):
		super().__init__(f"Node {node} is offline and cannot receive messages.")


class EgressViolationError(NetsimError):
	def __init__(self, phase: str = None):
		super().__init__(f"A non-model payload was offered to the bus during phase {phase}.")
