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
from pydantic import Field
from typing import Annotated
from .. import utils
from .common import SamplePool


__all__ = ["synth_blobs"]


@utils.input_validator()
def synth_blobs(
		k: Annotated[int, Field(ge=2)],
		d: Annotated[int, Field(ge=2)],
		per_class: Annotated[int, Field(ge=1)],
		separation: Annotated[float, Field(ge=0.0)] = 5.0,
		seed: int = 0
) -> SamplePool:
	"""
	Draws Gaussian class clusters with unit covariance. Class c is
	centered at separation * e_c when k <= d, otherwise at separation
	times a random unit direction.

	:param k: Number of classes.
	:param d: Feature dimensionality.
	:param per_class: Samples drawn for every class.
	:param separation: Distance of every class mean from the origin.
	:param seed: Seed of the generator.
	:return: A pool of k * per_class samples ordered by class.
	:raises - pydantic.ValidationError: On invalid input.
	"""
	rng = np.random.default_rng(seed)
	if k <= d:
		directions = np.eye(k, d)
	else:
		directions = rng.standard_normal((k, d))
		directions /= np.linalg.norm(directions, axis=1, keepdims=True)

	means = separation * directions
	features = np.vstack([
		means[c] + rng.standard_normal((per_class, d))
		for c in range(k)
	])
	labels = np.repeat(np.arange(1, k + 1), per_class)
	return SamplePool(X=features, y=labels, num_classes=k)
