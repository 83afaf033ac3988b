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
import logging
import numpy as np
from pathlib import Path
from ..errors import ConfigurationError
from .. import utils
from .common import SamplePool, LocalDataset
from . import errors


__all__ = ["HAPT_CLASSES", "HAPT_SPLITS", "load_hapt", "hapt_redistribute"]


logger = logging.getLogger(__name__)

HAPT_CLASSES = 12
HAPT_SPLITS = ("Train", "Test")
_REDISTRIBUTE_STAGE = 11


def _load_text(file: Path, ndmin: int) -> np.ndarray:
	if not file.is_file():
		raise errors.DataFormatError(file, "file is missing")
	try:
		return np.loadtxt(file, ndmin=ndmin)
	except ValueError as ex:
		raise errors.DataFormatError(file, f"cannot be parsed ({ex})")


def _load_split(directory: Path, split: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
	suffix = split.lower()
	x_file = directory / split / f"X_{suffix}.txt"
	y_file = directory / split / f"y_{suffix}.txt"
	s_file = directory / split / f"subject_id_{suffix}.txt"

	features = _load_text(x_file, ndmin=2)
	labels = _load_text(y_file, ndmin=1).astype(np.int64)
	subjects = _load_text(s_file, ndmin=1).astype(np.int64)

	if labels.shape[0] != features.shape[0]:
		raise errors.DataFormatError(
			y_file, f"{labels.shape[0]} labels for {features.shape[0]} feature rows"
		)
	if subjects.shape[0] != features.shape[0]:
		raise errors.DataFormatError(
			s_file, f"{subjects.shape[0]} subject ids for {features.shape[0]} feature rows"
		)
	if labels.size and (labels.min() < 1 or labels.max() > HAPT_CLASSES):
		raise errors.DataFormatError(y_file, f"labels outside of 1..{HAPT_CLASSES}")
	return features, labels, subjects


def load_hapt(path: str | Path) -> SamplePool:
	"""
	Loads the 561-feature HAPT recordings from the UCI directory layout,
	where `Train/` and `Test/` hold whitespace-separated `X_*.txt`,
	`y_*.txt` and `subject_id_*.txt` files. The official split is
	discarded, every row keeps the id of the user who recorded it.

	:param path: Root directory of the extracted HAPT archive.
	:return: A pool with 12 classes whose groups are the user ids.
	:raises - errors.DataFormatError: On missing files, row count
		mismatches or labels outside of 1..12.
	"""
	directory = Path(path)
	parts = [_load_split(directory, split) for split in HAPT_SPLITS]
	dims = {part[0].shape[1] for part in parts}
	if len(dims) != 1:
		raise errors.DataFormatError(directory / "Test", f"feature widths differ: {sorted(dims)}")

	pool = SamplePool(
		X=np.vstack([p[0] for p in parts]),
		y=np.concatenate([p[1] for p in parts]),
		num_classes=HAPT_CLASSES,
		groups=np.concatenate([p[2] for p in parts])
	)
	logger.info(
		"Loaded %d HAPT records of %d users from %s",
		len(pool), np.unique(pool.groups).size, directory
	)
	return pool


def hapt_redistribute(pool: SamplePool, seed: int = 0) -> list[LocalDataset]:
	"""
	Keeps the users who recorded every class as locations and hands the
	records of all other users to them uniformly at random. Location ids
	follow the ascending order of the kept user ids.

	:param pool: A pool whose groups hold the user ids.
	:param seed: Seed of the random reassignment.
	:return: One local dataset per complete user.
	:raises - ConfigurationError: If fewer than two users are complete.
	"""
	if pool.groups is None:
		raise ConfigurationError("HAPT redistribution needs user ids in the pool groups.")

	all_classes = set(range(1, pool.num_classes + 1))
	users = np.unique(pool.groups)
	complete = np.array([
		user for user in users
		if set(np.unique(pool.y[pool.groups == user]).tolist()) == all_classes
	], dtype=np.int64)
	if complete.size < 2:
		raise ConfigurationError(
			f"Only {complete.size} users recorded all {pool.num_classes} "
			f"classes, at least 2 are needed."
		)

	owners = pool.groups.copy()
	orphaned = ~np.isin(owners, complete)
	rng = utils.derive_rng(seed, _REDISTRIBUTE_STAGE)
	owners[orphaned] = rng.choice(complete, size=int(orphaned.sum()))
	logger.info(
		"Redistributed %d records of %d incomplete users across %d complete users",
		int(orphaned.sum()), users.size - complete.size, complete.size
	)

	return [
		LocalDataset(
			location_id=location_id,
			X=pool.X[owners == user],
			y=pool.y[owners == user],
			num_classes=pool.num_classes
		)
		for location_id, user in enumerate(complete)
	]
