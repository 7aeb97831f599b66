# Copyright 2026 The tablescene authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Asset catalog: one annotated asset per line.

A line looks like::

    {"asset_id": "mug-003", "Category": "Mug", "Description": "red ceramic coffee mug",
     "Size": [9.0, 12.0, 10.0], "OnTable": true, "Mass": 0.3, "Front View": 0,
     "IsContainer": true, "Material": "ceramic"}
"""

import json
from types import MappingProxyType
from typing import Annotated, Any, Iterable, Mapping, NamedTuple
from pydantic import AfterValidator, BaseModel, ConfigDict, Field, ValidationError
from ..layout import BoxSize


class CatalogError(ValueError):
    """A catalog line is malformed or an asset id repeats."""


class AssetEntry(NamedTuple):
    """One library asset.

    Args:
        asset_id: Unique key.
        category: Object class.
        description: Name, shape, color and material in free text.
        dims: Native box size (cm).
        on_table: Whether the asset belongs on a table.
        mass: Mass (kg).
        front_view: Index of the canonical front view.
        is_container: Whether the asset can hold other items.
        material: Material name.
        extra: Unrecognized annotation keys, kept for round trips. Read-only.
    """

    asset_id: str
    category: str
    description: str
    dims: BoxSize
    on_table: bool = True
    mass: float = 0.0
    front_view: int = 0
    is_container: bool = False
    material: str = ""
    extra: Mapping[str, Any] = MappingProxyType({})


def _check_dims(v: list[float]) -> list[float]:
    if any(x <= 0 for x in v):
        raise ValueError("asset dimensions must be positive")
    return v


class _AssetModel(BaseModel):
    model_config = ConfigDict(extra="allow", populate_by_name=True, allow_inf_nan=False)

    asset_id: str = Field(min_length=1)
    category: str = Field(alias="Category")
    description: str = Field(alias="Description")
    size: Annotated[
        list[float], Field(alias="Size", min_length=3, max_length=3), AfterValidator(_check_dims)
    ]
    on_table: bool = Field(True, alias="OnTable")
    mass: float = Field(0.0, alias="Mass")
    front_view: int = Field(0, alias="Front View")
    is_container: bool = Field(False, alias="IsContainer")
    material: str = Field("", alias="Material")

    def to_entry(self) -> AssetEntry:
        return AssetEntry(
            asset_id=self.asset_id,
            category=self.category,
            description=self.description,
            dims=BoxSize(*self.size),
            on_table=self.on_table,
            mass=self.mass,
            front_view=self.front_view,
            is_container=self.is_container,
            material=self.material,
            extra=MappingProxyType(dict(self.model_extra or {})),
        )


def parse_asset(data: Any) -> AssetEntry:
    try:
        return _AssetModel.model_validate(data).to_entry()
    except ValidationError as exc:
        raise CatalogError(str(exc)) from exc


def load_catalog(text: str) -> list[AssetEntry]:
    """Parse a line-delimited catalog; blank lines are ignored.

    Raises:
        CatalogError: A line is not a valid asset, or an asset id appears twice. The
            message starts with the 1-based line number.
    """
    entries: list[AssetEntry] = []
    seen: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            entry = parse_asset(json.loads(line))
        except json.JSONDecodeError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from exc
        except CatalogError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from exc
        if entry.asset_id in seen:
            raise CatalogError(f"line {lineno}: duplicate asset id {entry.asset_id!r}")
        seen.add(entry.asset_id)
        entries.append(entry)
    return entries


def asset_to_dict(entry: AssetEntry) -> dict[str, Any]:
    data: dict[str, Any] = {
        "asset_id": entry.asset_id,
        "Category": entry.category,
        "Description": entry.description,
        "Size": [float(x) for x in entry.dims],
        "OnTable": entry.on_table,
        "Mass": entry.mass,
        "Front View": entry.front_view,
        "IsContainer": entry.is_container,
        "Material": entry.material,
    }
    data.update(entry.extra)
    return data


def dump_catalog(entries: Iterable[AssetEntry]) -> str:
    return "".join(json.dumps(asset_to_dict(e), ensure_ascii=False) + "\n" for e in entries)
