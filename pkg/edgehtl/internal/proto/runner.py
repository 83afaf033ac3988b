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
from typing import Sequence
from ..data.common import LocalDataset
from ..netsim.bus import Bus
from ..netsim.common import EncodingConfig
from ..errors import ConfigurationError
from .common import ProtocolConfig, ProtocolResult, Tamper
from .gtl import run_gtl, run_gtl_limited
from .nohtl import run_nohtl


__all__ = ["run_protocol"]


def run_protocol(
		datasets: Sequence[LocalDataset],
		config: ProtocolConfig,
		encoding: EncodingConfig = None,
		tamper: Tamper = None
) -> ProtocolResult:
	"""
	Runs the static procedure named by `config.procedure` on a
	fresh bus with the given payload encoding.

	:raises - ConfigurationError: For the dynamic procedures, which
		run on an arrival stream instead.
	"""
	bus = Bus(sorted(ds.location_id for ds in datasets), encoding)
	match config.procedure:
		case "gtl":
			return run_gtl(datasets, config, bus, tamper)
		case "gtl_limited":
			return run_gtl_limited(datasets, config, bus, tamper)
		case "nohtl_mu" | "nohtl_mv":
			return run_nohtl(datasets, config, bus, tamper)
		case other:
			raise ConfigurationError(f"Procedure {other} runs on an arrival stream, use run_dynamic.")
