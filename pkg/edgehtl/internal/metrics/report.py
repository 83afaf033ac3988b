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
import math
import numpy as np
import pandas as pd
from pathlib import Path
from scipy import stats
from dotmap import DotMap
from typing import Any, Sequence


__all__ = ["METRIC_COLUMNS", "confidence_interval", "MetricsReport"]


METRIC_COLUMNS = ["run", "procedure", "location", "step", "class", "metric", "value"]


def confidence_interval(values: Sequence[float], level: float = 0.95) -> DotMap:
	"""
	Student-t confidence interval of the mean.

	:return: DotMap with `mean`, `half_width`, `low`, `high` and `n`.
		The half width is zero for fewer than two finite values.
	"""
	data = np.asarray([v for v in values if v is not None], dtype=np.float64)
	data = data[np.isfinite(data)]
	n = int(data.size)
	if n == 0:
		return DotMap(mean=math.nan, half_width=math.nan, low=math.nan, high=math.nan, n=0)
	mean = float(data.mean())
	half = 0.0
	if n > 1:
		sem = float(data.std(ddof=1)) / math.sqrt(n)
		half = float(stats.t.ppf(0.5 + level / 2.0, df=n - 1)) * sem
	return DotMap(mean=mean, half_width=half, low=mean - half, high=mean + half, n=n)


class MetricsReport:
	"""
	Long-format store of evaluation results. Every row is keyed by run,
	procedure, location, step and class, so any aggregate joins back to
	the rows it came from. Extra key columns, such as a sweep axis, are
	carried along unchanged.
	"""

	def __init__(self, rows: list[dict[str, Any]] = None) -> None:
		self._rows: list[dict[str, Any]] = list(rows or [])

	def __len__(self) -> int:
		return len(self._rows)

	def add(
			self,
			run: int,
			procedure: str,
			location: int | None,
			step: str,
			metric: str,
			value: float | None,
			class_label: int | None = None,
			**keys: Any
	) -> None:
		self._rows.append({
			"run": run,
			"procedure": procedure,
			"location": location,
			"step": step,
			"class": class_label,
			"metric": metric,
			"value": math.nan if value is None else float(value),
			**keys
		})

	def add_scores(self, run: int, procedure: str, location: int | None, step: str, scores: DotMap, **keys: Any) -> None:
		for metric in ("precision", "recall", "f_measure"):
			self.add(run, procedure, location, step, metric, scores[metric], **keys)
		for index, value in enumerate(scores.per_class, start=1):
			self.add(run, procedure, location, step, "class_accuracy", value, class_label=index, **keys)

	def extend(self, other: MetricsReport, **keys: Any) -> None:
		self._rows.extend({**row, **keys} for row in other._rows)

	def to_frame(self) -> pd.DataFrame:
		frame = pd.DataFrame.from_records(self._rows)
		if frame.empty:
			return pd.DataFrame(columns=METRIC_COLUMNS)
		return frame

	def to_csv(self, path: str | Path) -> Path:
		path = Path(path)
		path.parent.mkdir(parents=True, exist_ok=True)
		self.to_frame().to_csv(path, index=False)
		return path

	@classmethod
	def read_csv(cls, path: str | Path) -> MetricsReport:
		frame = pd.read_csv(path)
		frame = frame.astype(object).where(frame.notna(), None)
		return cls(frame.to_dict(orient="records"))

	def summary(self, metric: str = "f_measure", by: Sequence[str] = ("procedure", "step"), level: float = 0.95) -> list[dict]:
		"""
		Averages one metric over runs and locations per group, with a
		Student-t confidence interval of the mean.
		"""
		frame = self.to_frame()
		if frame.empty:
			return []
		frame = frame[frame["metric"] == metric]
		by = [column for column in by if column in frame.columns]
		out = []
		for key, group in frame.groupby(by, sort=True, dropna=False):
			key = key if isinstance(key, tuple) else (key,)
			interval = confidence_interval(group["value"].tolist(), level)
			out.append({**dict(zip(by, key)), "metric": metric, **interval.toDict()})
		return out
