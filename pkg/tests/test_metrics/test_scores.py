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
import pytest
import numpy as np
from edgehtl.errors import InvalidArgsError, UndefinedMetricError
from edgehtl.metrics import (
	precision,
	recall,
	f_measure,
	ppg,
	per_class_accuracy,
	evaluate
)


def test_precision_examples():
	assert precision([1, 2, 3], [1, 2, 3]) == 1.0
	assert precision([2, 3, 1], [1, 2, 3]) == 0.0
	assert precision([1, 2, 3, 3], [1, 2, 3, 1]) == 0.75


def test_recall_examples():
	assert recall([1, 1, 1, 1], [1, 1, 2, 2], k=2) == 0.5
	assert recall([1, 2], [1, 2], k=2) == 1.0
	assert recall([1, 1], [1, 2], k=3) == 0.5


def test_f_measure_examples():
	assert f_measure(0.4, 0.4) == pytest.approx(0.4)
	assert f_measure(1.0, 0.5) == pytest.approx(2.0 / 3.0)
	assert f_measure(0.0, 0.0) == 0.0
	assert f_measure(0.0, 0.9) == 0.0


@pytest.mark.parametrize("p, r", [(0.2, 0.9), (0.5, 0.6), (1.0, 0.1)])
def test_f_measure_properties(p: float, r: float):
	assert f_measure(p, r) == pytest.approx(f_measure(r, p))
	assert f_measure(p, r) <= (p + r) / 2.0


def test_ppg_examples():
	assert ppg(0.6, 0.6) == 0.0
	assert ppg(0.75, 0.5) == pytest.approx(0.5)
	assert ppg(1.0, 0.3) == 1.0
	assert ppg(0.2, 0.5) < 0.0
	assert ppg(0.9, 1.0) is None
	assert ppg(0.7, 0.4) < ppg(0.8, 0.4)


def test_per_class_accuracy():
	assert per_class_accuracy([1, 2, 3], [1, 2, 3], k=3).tolist() == [1.0, 1.0, 1.0]
	rates = per_class_accuracy([1, 1, 1], [1, 2, 1], k=3)
	assert rates[0] == 1.0
	assert rates[1] == 0.0
	assert np.isnan(rates[2])


def test_precision_weights_class_rates(rng: np.random.Generator):
	truths = rng.integers(1, 5, size=200)
	predictions = np.where(rng.random(200) < 0.7, truths, rng.integers(1, 5, size=200))
	rates = per_class_accuracy(predictions, truths, k=4)
	weights = np.bincount(truths, minlength=5)[1:] / truths.size
	assert precision(predictions, truths) == pytest.approx(float(np.nansum(rates * weights)))


def test_evaluate_bundle():
	scores = evaluate([1, 2, 2, 2], [1, 2, 2, 1], k=2)
	assert scores.precision == 0.75
	assert scores.recall == pytest.approx(0.75)
	assert scores.f_measure == pytest.approx(0.75)
	assert scores.per_class.tolist() == [0.5, 1.0]


def test_undefined_metrics():
	with pytest.raises(UndefinedMetricError):
		precision([], [])
	with pytest.raises(UndefinedMetricError):
		recall([], [], k=3)
	with pytest.raises(InvalidArgsError):
		precision([1, 2], [1])
