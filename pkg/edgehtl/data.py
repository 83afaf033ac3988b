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
from .internal.data.common import (
	Sample,
	SamplePool,
	LocalDataset,
	HoldoutSplit
)
from .internal.data.mnist import (
	read_idx_images,
	read_idx_labels,
	load_mnist
)
from .internal.data.hog import (
	HogConfig,
	hog_features,
	hog_batch
)
from .internal.data.hapt import (
	HAPT_CLASSES,
	load_hapt,
	hapt_redistribute
)
from .internal.data.partition import (
	PartitionSpec,
	partition,
	partition_indices,
	partition_by_group
)
from .internal.data.holdout import (
	holdout
)
from .internal.data.synth import (
	synth_blobs
)
from .internal.data.scaling import (
	Standardizer
)
from .internal.data.export import (
	export_csv
)


__all__ = [
	"Sample",
	"SamplePool",
	"LocalDataset",
	"HoldoutSplit",
	"read_idx_images",
	"read_idx_labels",
	"load_mnist",
	"HogConfig",
	"hog_features",
	"hog_batch",
	"HAPT_CLASSES",
	"load_hapt",
	"hapt_redistribute",
	"PartitionSpec",
	"partition",
	"partition_indices",
	"partition_by_group",
	"holdout",
	"synth_blobs",
	"Standardizer",
	"export_csv"
]
