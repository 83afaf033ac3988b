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
from dotmap import DotMap
from pydantic import Field
from typing import Annotated, Literal, Optional
from .. import utils
from .common import Phase
from .ledger import OverheadLedger


__all__ = [
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


Locations = Annotated[int, Field(ge=2)]
Classes = Annotated[int, Field(ge=1)]
Count = Annotated[float, Field(ge=0)]

Procedure = Literal["gtl", "gtl_limited", "nohtl_mu", "nohtl_mv", "dyn_gtl", "dyn_nohtl"]


@utils.input_validator()
def predict_overhead_gtl(s: Locations, k: Classes, d0: Count, d1: Count) -> DotMap:
	"""
	:return: DotMap with `oh0` = s(s-1)k*d0 for broadcasting the local
		models, `oh1` = s(s-1)k*d1 for broadcasting the transfer models,
		and their sum `total`.
	"""
	oh0 = s * (s - 1) * k * d0
	oh1 = s * (s - 1) * k * d1
	return DotMap(oh0=oh0, oh1=oh1, total=oh0 + oh1)


@utils.input_validator()
def predict_overhead_gtl_limited(
		s: Locations,
		k: Classes,
		aggregators: Annotated[int, Field(ge=1)],
		d0: Count,
		d1: Count
) -> DotMap:
	"""
	Traffic of the first two exchanges when only `aggregators` nodes
	retrain: every node sends to every other aggregator, aggregators
	then exchange among themselves. Equals the full GTL values when
	`aggregators` = s. The final hand-back is metered separately.
	"""
	oh0 = aggregators * (s - 1) * k * d0
	oh1 = aggregators * (aggregators - 1) * k * d1
	return DotMap(oh0=oh0, oh1=oh1, total=oh0 + oh1)


@utils.input_validator()
def predict_overhead_nohtl(s: Locations, k: Classes, d0: Count) -> DotMap:
	"""
	:return: DotMap with the star-topology consensus traffic
		`mu` = 2k(s-1)*d0 and the all-to-all voting traffic
		`mv` = k*s(s-1)*d0.
	"""
	return DotMap(mu=2 * k * (s - 1) * d0, mv=k * s * (s - 1) * d0)


@utils.input_validator()
def overhead_bound(s: Locations, k: Classes, d0: Count) -> float:
	"""Upper bound 2k*s^2*d0 on the GTL traffic, valid whenever d1 <= d0."""
	return 2 * k * s * s * d0


@utils.input_validator()
def overhead_g(s: Annotated[int, Field(ge=1)], k: Classes, d0: Count) -> float:
	"""
	Extra traffic of one dynamic phase between the permanent device and
	`s` newcomers: the aggregate goes out to each newcomer and the merged
	update comes back once, d0*k*(s+1) coefficients.
	"""
	return d0 * k * (s + 1)


@utils.input_validator()
def predict_overhead_dyn_gtl(s: Locations, k: Classes, d0: Count, d1: Count) -> DotMap:
	batch = predict_overhead_gtl(s, k, d0, d1)
	extra = overhead_g(s, k, d0)
	return DotMap(gtl=batch.total, g=extra, total=batch.total + extra)


@utils.input_validator()
def cloud_overhead(n: Annotated[int, Field(ge=0)], dim: Annotated[int, Field(ge=1)]) -> float:
	"""Coefficients needed to upload `n` samples of dimensionality `dim`."""
	return float(n * dim)


def gain(overhead: float, cloud: float) -> Optional[float]:
	"""Relative saving 1 - overhead / cloud, None when the cloud moves nothing."""
	if cloud <= 0:
		return None
	return 1.0 - overhead / cloud


@utils.input_validator()
def gain_lower_bound(
		s: Locations,
		k: Classes,
		d0: Count,
		n: Annotated[int, Field(gt=0)],
		dc: Annotated[float, Field(gt=0)]
) -> DotMap:
	"""
	Lower bound on the saving of GTL over uploading all data.

	:return: DotMap with the `exact` bound 1 - 2k*s^2*d0 / (N*dc), the
		approximation `same_dims` = 1 - 2k*s^2 / N for d0 close to dc,
		the approximation `per_location` = 1 - 2k*s / mu_D, the mean
		local dataset size `mu_d` = N / s, and `break_even_s` = mu_D / 2k,
		the number of locations above which GTL stops paying off.
	"""
	mu_d = n / s
	return DotMap(
		exact=1.0 - (2 * k * s * s * d0) / (n * dc),
		same_dims=1.0 - (2 * k * s * s) / n,
		per_location=1.0 - (2 * k * s) / mu_d,
		mu_d=mu_d,
		break_even_s=mu_d / (2 * k)
	)


def to_megabytes(coefficients: float, bytes_per_coeff: int = 8) -> float:
	return coefficients * bytes_per_coeff / 1e6


def _row(phase: str, metered: float, predicted: float) -> dict:
	residual = metered - predicted
	return dict(
		phase=phase,
		metered=metered,
		predicted=predicted,
		residual=residual,
		exact=abs(residual) <= 1e-6 * max(1.0, abs(predicted))
	)


def reconcile(
		ledger: OverheadLedger,
		procedure: Procedure,
		s: int,
		k: int,
		aggregators: int = None
) -> list[dict]:
	"""
	Compares metered traffic per phase with the formula predictions,
	evaluated with the measured mean d0 and d1 of the run.

	:param ledger: Ledger of one completed protocol run.
	:param procedure: The procedure that produced the ledger.
	:param s: Number of participating locations.
	:param k: Number of classes.
	:param aggregators: Aggregator count of the `gtl_limited` procedure.
	:return: One row per phase with the metered and predicted coefficient
		counts, their residual and whether they agree exactly.
	"""
	if len(ledger) == 0:
		return [_row("total", 0.0, 0.0)]

	d0 = ledger.mean_count(Phase.STEP1, Phase.COLLECTOR_UP)
	d1 = ledger.mean_count(Phase.STEP3)
	rows = []
	match procedure:
		case "gtl" | "dyn_gtl":
			# a single newcomer exchanges nothing among locations
			if s >= 2:
				predicted = predict_overhead_gtl(s, k, d0, d1)
				rows.append(_row(Phase.STEP1.value, ledger.count(Phase.STEP1), predicted.oh0))
				rows.append(_row(Phase.STEP3.value, ledger.count(Phase.STEP3), predicted.oh1))
			if procedure == "dyn_gtl" and ledger.messages(Phase.DYN_G):
				dm = ledger.mean_count(Phase.DYN_G)
				rows.append(_row(Phase.DYN_G.value, ledger.count(Phase.DYN_G), overhead_g(s, k, dm)))
		case "gtl_limited":
			predicted = predict_overhead_gtl_limited(s, k, aggregators or s, d0, d1)
			rows.append(_row(Phase.STEP1.value, ledger.count(Phase.STEP1), predicted.oh0))
			rows.append(_row(Phase.STEP3.value, ledger.count(Phase.STEP3), predicted.oh1))
		case "nohtl_mu":
			predicted = predict_overhead_nohtl(s, k, d0).mu
			metered = ledger.count(Phase.COLLECTOR_UP, Phase.COLLECTOR_DOWN)
			rows.append(_row("collector", metered, predicted))
		case "dyn_nohtl":
			# the permanent device collects, so all s newcomers upload and download
			metered = ledger.count(Phase.COLLECTOR_UP, Phase.COLLECTOR_DOWN)
			rows.append(_row("collector", metered, 2 * k * s * d0))
		case "nohtl_mv":
			predicted = predict_overhead_nohtl(s, k, d0).mv
			rows.append(_row(Phase.STEP1.value, ledger.count(Phase.STEP1), predicted))
	rows.append(_row(
		"total", ledger.count(),
		sum(r["predicted"] for r in rows) + _unpredicted(ledger, procedure)
	))
	return rows


def _unpredicted(ledger: OverheadLedger, procedure: str) -> float:
	if procedure == "gtl_limited":
		return ledger.count(Phase.COLLECTOR_DOWN)
	return 0.0
