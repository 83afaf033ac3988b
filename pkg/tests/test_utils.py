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
import pytest
import secrets
from pathlib import Path
from typing import Callable
from edgehtl.internal import utils


def test_input_validator():
	decorator = utils.input_validator()
	assert isinstance(decorator, Callable)


def test_search_upwards():
	path = utils.search_upwards(__file__, Path(__file__).parent.name)
	assert isinstance(path, Path)
	assert path == Path(__file__).parent


def test_search_upwards_error():
	with pytest.raises(RuntimeError):
		bad_path = secrets.token_hex()
		utils.search_upwards(__file__, bad_path)


def test_resolve_relpath(tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
	monkeypatch.chdir(tmp_path)
	assert utils.resolve_relpath("results") == (tmp_path / "results").resolve()
	assert utils.resolve_relpath(tmp_path) == tmp_path
	assert utils.resolve_relpath(None) == tmp_path.resolve()


def test_derive_seed_is_deterministic_and_ordered():
	assert utils.derive_seed(1, 2, 3) == utils.derive_seed(1, 2, 3)
	assert utils.derive_seed(1, 2, 3) != utils.derive_seed(1, 3, 2)
	assert 0 <= utils.derive_seed(0) < 2 ** 32


def test_derive_seed_accepts_negative_keys():
	assert utils.derive_seed(5, -1) == utils.derive_seed(5, 0xFFFFFFFF)
	assert utils.derive_rng(5, -1).integers(1000) == utils.derive_rng(5, -1).integers(1000)


def test_run_parallel_preserves_order():
	def work(item: int) -> int:
		return item * item

	assert utils.run_parallel(work, range(20), workers=4) == [i * i for i in range(20)]
	assert utils.run_parallel(work, [3], workers=4) == [9]
	assert utils.run_parallel(work, [], workers=1) == []
