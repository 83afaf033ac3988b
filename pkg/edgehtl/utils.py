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
from .internal.utils import (
	derive_seed,
	derive_rng,
	run_parallel
)


__all__ = [
	"derive_seed",
	"derive_rng",
	"run_parallel"
]
