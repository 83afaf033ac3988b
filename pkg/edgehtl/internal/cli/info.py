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
from importlib import metadata


__all__ = ["PackageInfo"]


class PackageInfo(DotMap):
	_PACKAGE_NAME = "edgehtl"
	_FIELDS = ["Name", "Version", "Summary", "License", "Author"]

	def __init__(self) -> None:
		super().__init__()
		try:
			meta = metadata.metadata(self._PACKAGE_NAME)
		except metadata.PackageNotFoundError:  # pragma: no cover
			return
		for key in self._FIELDS:
			if meta.get(key):
				setattr(self, key, meta[key])
		for url in meta.get_all("Project-URL") or []:
			label, _, value = url.partition(", ")
			if label == "Repository":
				setattr(self, "Homepage", value)
