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
from .internal.learn.common import (
	ModelKind,
	LinearModel,
	SourceSet,
	source_features,
	flatten
)
from .internal.learn.svm import (
	SvmConfig,
	train_svm,
	hinge_objective
)
from .internal.learn.ridge import (
	ridge_solve,
	RidgePath,
	forward_selection
)
from .internal.learn.greedytl import (
	GreedyTLConfig,
	greedy_tl
)


__all__ = [
	"ModelKind",
	"LinearModel",
	"SourceSet",
	"source_features",
	"flatten",
	"SvmConfig",
	"train_svm",
	"hinge_objective",
	"ridge_solve",
	"RidgePath",
	"forward_selection",
	"GreedyTLConfig",
	"greedy_tl"
]
