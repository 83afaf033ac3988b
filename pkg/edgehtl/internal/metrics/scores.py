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
import numpy as np
from dotmap import DotMap
from typing import Optional, Sequence
from ..errors import InvalidArgsError
from . import errors


__all__ = [
	"precision",
	"recall",
	"f_measure",
	"ppg",
	"per_class_accuracy",
	"evaluate"
]


ArrayLike = Sequence[int] | np.ndarray


def _pair(predictions: ArrayLike, truths: ArrayLike, metric: str) -> tuple[np.ndarray, np.ndarray]:
	predictions = np.asarray(predictions, dtype=np.int64).ravel()
	truths = np.asarray(truths, dtype=np.int64).ravel()
	if predictions.shape != truths.shape:
		raise InvalidArgsError(f"Got {predictions.size} predictions for {truths.size} truths.")
	if truths.size == 0:
		raise errors.UndefinedMetricError(metric)
	return predictions, truths


def precision(predictions: ArrayLike, truths: ArrayLike) -> float:
	"""
	Fraction of correct predictions over all predictions. This is the
	overall accuracy, which the evaluation protocol calls precision.

	:raises - errors.UndefinedMetricError: On empty input.
	"""
	predictions, truths = _pair(predictions, truths, "precision")
	return float(np.mean(predictions == truths))


def per_class_accuracy(predictions: ArrayLike, truths: ArrayLike, k: int) -> np.ndarray:
	"""
	:return: Hit rate of every class 1..k, NaN for classes
		that do not occur among the truths.
	"""
	predictions, truths = _pair(predictions, truths, "per-class accuracy")
	support = np.bincount(truths, minlength=k + 1)[1:k + 1]
	hits = np.bincount(truths[predictions == truths], minlength=k + 1)[1:k + 1]
	return np.divide(
		hits, support,
		out=np.full(k, np.nan),
		where=support > 0
	)


def recall(predictions: ArrayLike, truths: ArrayLike, k: int) -> float:
	"""
	Mean per-class hit rate over the classes present among the truths.

	:raises - errors.UndefinedMetricError: If no class is present.
	"""
	rates = per_class_accuracy(predictions, truths, k)
	present = ~np.isnan(rates)
	if not present.any():
		raise errors.UndefinedMetricError("recall", "no classes are present")
	return float(rates[present].mean())


def f_measure(p: float, r: float) -> float:
	"""Harmonic mean of precision and recall, 0.0 when both are zero."""
	if p + r == 0.0:
		return 0.0
	return 2.0 * p * r / (p + r)


def ppg(f_step: float, f_base: float) -> Optional[float]:
	"""
	Prediction performance gain 1 - (1 - F_step) / (1 - F_base).
	Negative values mean the step is worse than the local base model.

	:return: The gain, or None when the base model is already perfect.
	"""
	if f_base >= 1.0:
		return None
	return 1.0 - (1.0 - f_step) / (1.0 - f_base)


def evaluate(predictions: ArrayLike, truths: ArrayLike, k: int) -> DotMap:
	p = precision(predictions, truths)
	r = recall(predictions, truths, k)
	return DotMap(
		precision=p,
		recall=r,
		f_measure=f_measure(p, r),
		per_class=per_class_accuracy(predictions, truths, k)
	)
