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
from __future__ import annotations
import orjson
import threading
import pandas as pd
from pathlib import Path
from dotmap import DotMap
from dataclasses import dataclass
from .common import ModelMessage, Phase


__all__ = ["LedgerRow", "OverheadLedger"]


COLUMNS = ["sequence", "phase", "src", "dst", "class_label", "count", "bytes"]


@dataclass(frozen=True)
class LedgerRow:
	sequence: int
	phase: Phase
	src: int
	dst: int
	class_label: int | None
	count: int
	bytes: int


class OverheadLedger:
	"""
	Append-only record of every metered message. Counts are non-null
	coefficients, bytes follow the bus encoding.
	"""

	def __init__(self, rows: list[LedgerRow] = None) -> None:
		self._rows: list[LedgerRow] = list(rows or [])
		self._lock = threading.Lock()

	def __len__(self) -> int:
		return len(self._rows)

	@property
	def rows(self) -> list[LedgerRow]:
		return list(self._rows)

	def record(self, message: ModelMessage) -> LedgerRow:
		with self._lock:
			row = LedgerRow(
				sequence=len(self._rows),
				phase=message.phase,
				src=message.src,
				dst=message.dst,
				class_label=message.class_label,
				count=message.non_null_count,
				bytes=message.byte_size
			)
			self._rows.append(row)
			return row

	def mark(self) -> int:
		return len(self._rows)

	def since(self, mark: int) -> OverheadLedger:
		return OverheadLedger(self._rows[mark:])

	def _select(self, phases: tuple[Phase, ...]) -> list[LedgerRow]:
		if not phases:
			return self._rows
		wanted = {Phase(p) for p in phases}
		return [row for row in self._rows if row.phase in wanted]

	def messages(self, *phases: Phase) -> int:
		return len(self._select(phases))

	def count(self, *phases: Phase) -> int:
		return sum(row.count for row in self._select(phases))

	def bytes(self, *phases: Phase) -> int:
		return sum(row.bytes for row in self._select(phases))

	def mean_count(self, *phases: Phase) -> float:
		"""Mean non-null coefficients per message, 0.0 without messages."""
		rows = self._select(phases)
		return sum(row.count for row in rows) / len(rows) if rows else 0.0

	def per_phase(self) -> dict[str, DotMap]:
		return {
			phase.value: DotMap(
				messages=self.messages(phase),
				count=self.count(phase),
				bytes=self.bytes(phase)
			)
			for phase in Phase
			if self.messages(phase)
		}

	def summary(self) -> DotMap:
		return DotMap(
			messages=self.messages(),
			count=self.count(),
			bytes=self.bytes(),
			phases=self.per_phase()
		)

	def to_frame(self) -> pd.DataFrame:
		records = [
			{**row.__dict__, "phase": row.phase.value}
			for row in self._rows
		]
		return pd.DataFrame.from_records(records, columns=COLUMNS)

	def export_csv(self, path: str | Path) -> Path:
		path = Path(path)
		path.parent.mkdir(parents=True, exist_ok=True)
		self.to_frame().to_csv(path, index=False)
		return path

	def export_json(self, path: str | Path, reconciliation: list[dict] = None) -> Path:
		path = Path(path)
		path.parent.mkdir(parents=True, exist_ok=True)
		document = {
			"rows": self.to_frame().to_dict(orient="records"),
			"summary": self.summary().toDict(),
			"reconciliation": reconciliation or []
		}
		path.write_bytes(orjson.dumps(document, option=orjson.OPT_INDENT_2 | orjson.OPT_SERIALIZE_NUMPY))
		return path
