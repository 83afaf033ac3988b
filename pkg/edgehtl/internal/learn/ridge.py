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
from typing import Sequence
from dataclasses import dataclass
from scipy.linalg import cho_factor, cho_solve, solve_triangular
from . import errors


__all__ = [
	"ridge_solve",
	"ridge_objective",
	"RidgePath",
	"ForwardSelection",
	"forward_selection"
]


def _check_finite(design: np.ndarray, targets: np.ndarray, lam: float) -> None:
	if not (np.isfinite(design).all() and np.isfinite(targets).all() and np.isfinite(lam)):
		raise errors.NumericError("ridge system")
	if lam <= 0.0:
		raise errors.NumericError("ridge weight, which must be positive")


def ridge_solve(design: np.ndarray, targets: np.ndarray, lam: float) -> np.ndarray:
	"""
	Solves (A^T A / m + lam * I) w = A^T y / m.

	:param design: The selected design matrix A of shape (m, p).
	:param targets: The targets y of length m.
	:param lam: Tikhonov weight, must be positive.
	:return: The coefficient vector w of length p.
	:raises - errors.NumericError: On non-finite input or a non-positive weight.
	"""
	design = np.atleast_2d(np.asarray(design, dtype=np.float64))
	targets = np.asarray(targets, dtype=np.float64)
	_check_finite(design, targets, lam)
	m, p = design.shape
	if p == 0:
		return np.zeros(0)
	system = design.T @ design / m + lam * np.eye(p)
	return cho_solve(cho_factor(system), design.T @ targets / m)


def ridge_objective(design: np.ndarray, targets: np.ndarray, coefficients: np.ndarray, lam: float) -> float:
	"""Mean squared error plus lam times the squared norm of the coefficients."""
	residual = targets - design @ coefficients
	return float(residual @ residual / targets.size + lam * coefficients @ coefficients)


class RidgePath:
	"""
	Ridge fits over a growing column subset of a fixed design.
	Every added column extends the Cholesky factor of the regularized
	Gram matrix by one row, so gains of all candidate columns are
	evaluated in one vectorized pass.
	"""

	def __init__(self, design: np.ndarray, targets: np.ndarray, lam: float) -> None:
		design = np.atleast_2d(np.asarray(design, dtype=np.float64))
		targets = np.asarray(targets, dtype=np.float64)
		_check_finite(design, targets, lam)
		m = design.shape[0]
		self._lam = lam
		self._gram = design.T @ design / m
		self._moments = design.T @ targets / m
		self._baseline = float(targets @ targets / m)
		self._selected: list[int] = []
		self._factor = np.zeros((0, 0))
		self._projected = np.zeros(0)

	@property
	def selected(self) -> list[int]:
		return list(self._selected)

	@property
	def num_columns(self) -> int:
		return self._gram.shape[0]

	def objective(self) -> float:
		return self._baseline - float(self._projected @ self._projected)

	def _cross_terms(self) -> np.ndarray:
		if not self._selected:
			return np.zeros((0, self.num_columns))
		return solve_triangular(self._factor, self._gram[self._selected, :], lower=True)

	def gains(self) -> np.ndarray:
		"""
		:return: Decrease of the regularized objective for adding each
			column, with -inf for columns that are already selected.
		"""
		cross = self._cross_terms()
		schur = np.diag(self._gram) + self._lam - np.einsum("ij,ij->j", cross, cross)
		numerator = self._moments - cross.T @ self._projected
		gains = np.full(self.num_columns, -np.inf)
		free = np.ones(self.num_columns, dtype=bool)
		free[self._selected] = False
		gains[free] = numerator[free] ** 2 / schur[free]
		return gains

	def add(self, column: int) -> None:
		if column in self._selected:
			raise errors.LearnError(f"Column {column} is already selected.")
		cross = self._cross_terms()[:, column]
		schur = self._gram[column, column] + self._lam - cross @ cross
		if schur <= 0.0:
			raise errors.NumericError("Cholesky update")
		pivot = np.sqrt(schur)
		size = len(self._selected)
		factor = np.zeros((size + 1, size + 1))
		factor[:size, :size] = self._factor
		factor[size, :size] = cross
		factor[size, size] = pivot
		entry = (self._moments[column] - cross @ self._projected) / pivot
		self._factor = factor
		self._projected = np.append(self._projected, entry)
		self._selected.append(column)

	def coefficients(self) -> np.ndarray:
		"""
		:return: Ridge coefficients of the selected columns,
			in the order in which they were added.
		"""
		if not self._selected:
			return np.zeros(0)
		return solve_triangular(self._factor.T, self._projected, lower=False)


@dataclass(frozen=True, eq=False)
class ForwardSelection:
	coefficients: np.ndarray
	support: tuple[int, ...]
	objectives: tuple[float, ...]


def forward_selection(
		design: np.ndarray,
		targets: np.ndarray,
		lam: float,
		budget: int,
		forced: Sequence[int] = ()
) -> ForwardSelection:
	"""
	Greedy forward regression: starting from the `forced` columns,
	repeatedly adds the column with the largest decrease of the
	regularized mean squared error, until `budget` further columns
	are selected or no column decreases it. Exactly equal gains
	resolve to the lowest column index.

	:param design: Full design matrix of shape (m, p).
	:param targets: Regression targets of length m.
	:param lam: Tikhonov weight.
	:param budget: Number of columns to select beyond the forced ones.
	:param forced: Columns that are always part of the model.
	:return: Full-length coefficients, the selected support in order
		of selection and the objective after every accepted step.
	"""
	path = RidgePath(design, targets, lam)
	for column in forced:
		path.add(column)
	objectives = [path.objective()]

	for _ in range(budget):
		gains = path.gains()
		gains[list(forced)] = -np.inf
		best = int(np.argmax(gains))
		if not gains[best] > 0.0:
			break
		path.add(best)
		objectives.append(path.objective())

	full = np.zeros(path.num_columns)
	full[path.selected] = path.coefficients()
	support = tuple(c for c in path.selected if c not in set(forced))
	return ForwardSelection(coefficients=full, support=support, objectives=tuple(objectives))
