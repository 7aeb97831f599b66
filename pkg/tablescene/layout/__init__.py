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

"""Layout data model, record format and structural validation."""

from ._types import (
    Position,
    BoxSize,
    RegionRect,
    ObjectInstance,
    SceneLayout,
    ActionVerb,
    PrimitiveAction,
    TaskInfo,
)
from ._angles import normalize_angle
from ._codec import (
    FormatError,
    FormatErrorKind,
    parse_layout,
    parse_layout_dict,
    serialize_layout,
    canonicalize_layout,
    layout_to_dict,
)
from ._validate import (
    ViolationKind,
    Violation,
    ValidationReport,
    LayoutValidationError,
    validate_layout,
    check_layout,
)
from ._synthetic import (
    DEFAULT_REGION,
    random_layout,
)

__all__ = [
    "Position",
    "BoxSize",
    "RegionRect",
    "ObjectInstance",
    "SceneLayout",
    "ActionVerb",
    "PrimitiveAction",
    "TaskInfo",
    "normalize_angle",
    "FormatError",
    "FormatErrorKind",
    "parse_layout",
    "parse_layout_dict",
    "serialize_layout",
    "canonicalize_layout",
    "layout_to_dict",
    "ViolationKind",
    "Violation",
    "ValidationReport",
    "LayoutValidationError",
    "validate_layout",
    "check_layout",
    "DEFAULT_REGION",
    "random_layout",
]
