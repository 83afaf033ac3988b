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
import orjson
import logging
import threading
from collections import deque
from typing import Iterable
from ..learn.common import LinearModel
from .common import EncodingConfig, ModelMessage, Phase, Receipt
from .ledger import OverheadLedger
from . import errors


__all__ = ["Bus"]


logger = logging.getLogger(__name__)


class Bus:
	"""
	In-memory message bus between simulated nodes. Every send is audited
	to carry a model record, metered into the ledger and queued in order
	per destination. The bus models volume only, no latency or loss.
	"""

	def __init__(self, node_ids: Iterable[int], encoding: EncodingConfig = None) -> None:
		self._encoding = encoding or EncodingConfig()
		self._mailboxes: dict[int, deque[ModelMessage]] = {}
		self._offline: set[int] = set()
		self._ledger = OverheadLedger()
		self._lock = threading.Lock()
		for node_id in node_ids:
			self.add_node(node_id)

	@property
	def encoding(self) -> EncodingConfig:
		return self._encoding

	@property
	def ledger(self) -> OverheadLedger:
		return self._ledger

	@property
	def node_ids(self) -> list[int]:
		return sorted(self._mailboxes)

	def add_node(self, node_id: int) -> None:
		with self._lock:
			self._mailboxes.setdefault(int(node_id), deque())

	def set_offline(self, node_id: int, offline: bool = True) -> None:
		if node_id not in self._mailboxes:
			raise errors.RoutingError(node_id, node_id, "unknown node")
		if offline:
			self._offline.add(node_id)
		else:
			self._offline.discard(node_id)

	@staticmethod
	def _audit(message: ModelMessage) -> None:
		try:
			doc = orjson.loads(message.payload)
		except orjson.JSONDecodeError:
			raise errors.EgressViolationError(message.phase.value)
		if not isinstance(doc, dict) or doc.get("type") != "model":
			raise errors.EgressViolationError(message.phase.value)

	def send(self, message: ModelMessage) -> Receipt:
		"""
		:param message: A wrapped model message.
		:return: The delivery receipt.
		:raises - errors.RoutingError: On self-sends or unknown endpoints.
		:raises - errors.NodeOfflineError: If the destination is offline.
		:raises - errors.EgressViolationError: If the payload is not a model record.
		"""
		if message.src == message.dst:
			raise errors.RoutingError(message.src, message.dst, "self-send")
		if message.src not in self._mailboxes or message.dst not in self._mailboxes:
			raise errors.RoutingError(message.src, message.dst)
		if message.dst in self._offline:
			raise errors.NodeOfflineError(message.dst)
		self._audit(message)

		with self._lock:
			row = self._ledger.record(message)
			self._mailboxes[message.dst].append(message)
		logger.debug(
			"Message %d: %s %d -> %d carries %d coefficients",
			row.sequence, message.phase.value, message.src, message.dst, message.non_null_count
		)
		return Receipt(sequence=row.sequence, src=message.src, dst=message.dst, phase=message.phase)

	def send_model(
			self,
			src: int,
			dst: int,
			phase: Phase,
			model: LinearModel,
			class_label: int = None,
			owner: int = None
	) -> Receipt:
		message = ModelMessage.wrap(
			src, dst, phase, model, self._encoding,
			class_label=class_label, owner=owner
		)
		return self.send(message)

	def receive(self, node_id: int, phase: Phase = None) -> list[ModelMessage]:
		"""
		Drains the mailbox of a node, in arrival order. With `phase`
		given only messages of that phase are taken out.
		"""
		if node_id not in self._mailboxes:
			raise errors.RoutingError(node_id, node_id, "unknown node")
		with self._lock:
			mailbox = self._mailboxes[node_id]
			if phase is None:
				taken = list(mailbox)
				mailbox.clear()
				return taken
			taken = [m for m in mailbox if m.phase == phase]
			kept = [m for m in mailbox if m.phase != phase]
			mailbox.clear()
			mailbox.extend(kept)
			return taken

	def pending(self, node_id: int) -> int:
		return len(self._mailboxes.get(node_id, ()))
