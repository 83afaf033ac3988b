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
from .internal.multiclass.ova import (
	CodeBook,
	OvaClassifier,
	decode,
	decode_batch,
	predict,
	train_ova
)
from .internal.multiclass.aggregate import (
	consensus_mean,
	consensus_ova,
	majority_vote,
	MajorityEnsemble
)


__all__ = [
	"CodeBook",
	"OvaClassifier",
	"decode",
	"decode_batch",
	"predict",
	"train_ova",
	"consensus_mean",
	"consensus_ova",
	"majority_vote",
	"MajorityEnsemble"
]
