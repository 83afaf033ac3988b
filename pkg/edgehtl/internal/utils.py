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
import platform
import numpy as np
from pathlib import Path, PurePosixPath, PureWindowsPath
from concurrent.futures import ThreadPoolExecutor
from pydantic import ConfigDict, validate_call
from typing import Callable, Iterable, TypeVar


__all__ = [
	"input_validator",
	"search_upwards",
	"resolve_relpath",
	"derive_seed",
	"derive_rng",
	"run_parallel"
]


T = TypeVar("T")
R = TypeVar("R")


def input_validator() -> Callable:
	return validate_call(config=ConfigDict(
		arbitrary_types_allowed=True,
		validate_return=True
	))


def search_upwards(from_path: str | Path, for_path: str) -> Path:
	current_path = Path(from_path)
	while current_path != current_path.parent:
		new_path = current_path / for_path
		if new_path.exists():
			return new_path
		current_path = current_path.parent
	raise RuntimeError(f"Fatal Error! Path not found: {for_path}")


def resolve_relpath(path: str | Path | None) -> Path:
	if path is None:
		path = Path('')

	match platform.system():  # pragma: no cover
		case "Windows":
			pure_path = PureWindowsPath(path)
		case _:
			pure_path = PurePosixPath(path)

	if pure_path.is_absolute():
		return Path(path)
	return (Path.cwd() / path).resolve()


def derive_seed(*keys: int) -> int:
	"""
	Derives a 32-bit seed from an ordered tuple of integer keys.
	Negative keys are accepted, so the permanent device of the
	dynamic scenario can use a negative location id.

	:param keys: Base seed followed by any stage, location or class keys.
	:return: A seed that depends on every key and on their order.
	"""
	entropy = [int(k) & 0xFFFFFFFF for k in keys]
	state = np.random.SeedSequence(entropy).generate_state(1)
	return int(state[0])


def derive_rng(*keys: int) -> np.random.Generator:
	return np.random.default_rng(derive_seed(*keys))


def run_parallel(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
	"""
	Maps `func` over `items`, preserving input order in the output.
	Falls back to a plain loop when `workers` is one or less.
	"""
	items = list(items)
	if workers <= 1 or len(items) <= 1:
		return [func(item) for item in items]
	with ThreadPoolExecutor(max_workers=workers) as executor:
		return list(executor.map(func, items))
