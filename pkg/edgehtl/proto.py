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
from .internal.proto.common import (
	ProtocolConfig,
	Node,
	ProtocolResult
)
from .internal.proto.gtl import (
	run_gtl,
	run_gtl_limited
)
from .internal.proto.nohtl import (
	run_nohtl
)
from .internal.proto.runner import (
	run_protocol
)
from .internal.proto.malice import (
	MaliciousConfig,
	MaliciousTamper,
	corrupt,
	run_with_malice
)
from .internal.proto.dynamic import (
	DynamicConfig,
	arrival_stream,
	ema_merge,
	run_dynamic
)
from .internal.proto.cloud import (
	CloudBaseline,
	train_cloud
)


__all__ = [
	"ProtocolConfig",
	"Node",
	"ProtocolResult",
	"run_gtl",
	"run_gtl_limited",
	"run_nohtl",
	"run_protocol",
	"MaliciousConfig",
	"MaliciousTamper",
	"corrupt",
	"run_with_malice",
	"DynamicConfig",
	"arrival_stream",
	"ema_merge",
	"run_dynamic",
	"CloudBaseline",
	"train_cloud"
]
