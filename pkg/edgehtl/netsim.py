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
from .internal.netsim.common import (
	Phase,
	EncodingConfig,
	ModelMessage,
	Receipt
)
from .internal.netsim.bus import (
	Bus
)
from .internal.netsim.ledger import (
	OverheadLedger
)
from .internal.netsim.formulas import (
	predict_overhead_gtl,
	predict_overhead_gtl_limited,
	predict_overhead_nohtl,
	overhead_bound,
	overhead_g,
	predict_overhead_dyn_gtl,
	cloud_overhead,
	gain,
	gain_lower_bound,
	to_megabytes,
	reconcile
)


__all__ = [
	"Phase",
	"EncodingConfig",
	"ModelMessage",
	"Receipt",
	"Bus",
	"OverheadLedger",
	"predict_overhead_gtl",
	"predict_overhead_gtl_limited",
	"predict_overhead_nohtl",
	"overhead_bound",
	"overhead_g",
	"predict_overhead_dyn_gtl",
	"cloud_overhead",
	"gain",
	"gain_lower_bound",
	"to_megabytes",
	"reconcile"
]
