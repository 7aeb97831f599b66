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

"""Parsing and canonical serialization of layout records."""

import json
from enum import Enum
from typing import Any
from pydantic import ValidationError
from ._angles import normalize_angle
from ._schema import LayoutModel
from ._types import SceneLayout


class FormatErrorKind(Enum):
    """Classes of layout record format failures.

    MALFORMED_SYNTAX:
        Not JSON, wrong value types, empty strings or a degenerate region.
    MISSING_FIELD:
        A required key is absent.
    NON_FINITE_NUMBER:
        NaN or infinity anywhere in the record.
    EMPTY_OBJECT_LIST:
        The record holds no object.
    """

    MALFORMED_SYNTAX = "malformed_syntax"
    MISSING_FIELD = "missing_field"
    NON_FINITE_NUMBER = "non_finite_number"
    EMPTY_OBJECT_LIST = "empty_object_list"


class FormatError(ValueError):
    def __init__(
        self,
        kind: FormatErrorKind,
        message: str,
        field: str | None = None,
    ) -> None:
        super().__init__(message)
        self.kind = kind
        self.field = field


def _loc_to_str(loc: tuple[int | str, ...]) -> str:
    out = ""
    for part in loc:
        if isinstance(part, int):
            out += f"[{part}]"
        else:
            out += f".{part}" if out else str(part)
    return out


def _format_error(exc: ValidationError) -> FormatError:
    errors = exc.errors()
    for e in errors:
        if e["type"] == "missing":
            name = _loc_to_str(e["loc"])
            return FormatError(
                FormatErrorKind.MISSING_FIELD, f"missing field: {name}", field=name
            )
    for e in errors:
        if e["type"] == "finite_number":
            return FormatError(
                FormatErrorKind.NON_FINITE_NUMBER,
                f"non-finite number at {_loc_to_str(e['loc'])}",
            )
    for e in errors:
        if e["type"] == "too_short" and tuple(e["loc"]) == ("objects",):
            return FormatError(FormatErrorKind.EMPTY_OBJECT_LIST, "object list is empty")
    first = errors[0]
    return FormatError(
        FormatErrorKind.MALFORMED_SYNTAX,
        f"{_loc_to_str(first['loc'])}: {first['msg']}",
    )


def parse_layout_dict(data: Any) -> SceneLayout:
    """Validate an already decoded layout record.

    Raises:
        FormatError: See :class:`FormatErrorKind`.
    """
    if not isinstance(data, dict):
        raise FormatError(
            FormatErrorKind.MALFORMED_SYNTAX, "layout record must be a JSON object"
        )
    try:
        model = LayoutModel.model_validate(data)
    except ValidationError as exc:
        raise _format_error(exc) from None
    return model.to_layout()


def parse_layout(text: str) -> SceneLayout:
    """Parse a layout record.

    Object order is kept as given; rotations are normalized to [-pi, pi).

    Args:
        text: JSON layout record.

    Returns:
        The layout. Geometric checks are left to :func:`validate_layout`.

    Raises:
        FormatError: See :class:`FormatErrorKind`.
    """
    try:
        # Python's json accepts NaN/Infinity tokens; the schema rejects them.
        data = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise FormatError(FormatErrorKind.MALFORMED_SYNTAX, str(exc)) from None
    return parse_layout_dict(data)


def canonicalize_layout(layout: SceneLayout) -> SceneLayout:
    """Sort objects by id and normalize every rotation."""
    objects = sorted(layout.objects, key=lambda o: o.id)
    return layout._replace(
        objects=tuple(o._replace(rotation=normalize_angle(o.rotation)) for o in objects)
    )


def layout_to_dict(layout: SceneLayout) -> dict[str, Any]:
    """Record dictionary with keys in the fixed emission order."""
    return {
        "placement_region": [float(v) for v in layout.placement_region],
        "no_placement_zones": [[float(v) for v in z] for z in layout.no_placement_zones],
        "objects": [
            {
                "id": o.id,
                "description": o.description,
                "position": {
                    "x": float(o.position.x),
                    "y": float(o.position.y),
                    "z": float(o.position.z),
                },
                "size": {
                    "w": float(o.size.w),
                    "d": float(o.size.d),
                    "h": float(o.size.h),
                },
                "rotation": float(o.rotation),
            }
            for o in layout.objects
        ],
    }


def serialize_layout(layout: SceneLayout) -> str:
    """Canonical single-line record text.

    Equal layouts (up to object order and angle representation) give identical text.
    """
    return json.dumps(
        layout_to_dict(canonicalize_layout(layout)),
        separators=(",", ":"),
        ensure_ascii=False,
        allow_nan=False,
    )
