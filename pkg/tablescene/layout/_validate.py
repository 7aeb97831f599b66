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

from collections import Counter
from enum import Enum
from typing import NamedTuple
from ._types import SceneLayout


class ViolationKind(Enum):
    OUT_OF_REGION = "out_of_region"
    NO_PLACEMENT_ZONE = "no_placement_zone"
    NON_POSITIVE_SIZE = "non_positive_size"
    DUPLICATE_ID = "duplicate_id"


class Violation(NamedTuple):
    kind: ViolationKind
    object_id: str
    detail: str = ""


class ValidationReport(NamedTuple):
    violations: tuple[Violation, ...] = ()

    @property
    def is_valid(self) -> bool:
        return len(self.violations) == 0

    def ids(self, kind: ViolationKind) -> list[str]:
        return [v.object_id for v in self.violations if v.kind == kind]


class LayoutValidationError(ValueError):
    def __init__(self, report: ValidationReport) -> None:
        summary = ", ".join(f"{v.kind.value}({v.object_id})" for v in report.violations)
        super().__init__(f"invalid layout: {summary}")
        self.report = report


def validate_layout(layout: SceneLayout) -> ValidationReport:
    """Structural checks on a layout.

    Per object: footprint center outside the placement region, center inside a
    no-placement zone (e.g. a sink), non-positive box size, and repeated ids.

    Returns:
        Report whose violation list is empty iff the layout is valid.
    """
    violations: list[Violation] = []
    counts = Counter(layout.object_ids())
    for o in layout.objects:
        x, y = o.position.x, o.position.y
        if counts[o.id] > 1:
            violations.append(
                Violation(ViolationKind.DUPLICATE_ID, o.id, f"{counts[o.id]} objects")
            )
        if not layout.placement_region.contains(x, y):
            violations.append(
                Violation(ViolationKind.OUT_OF_REGION, o.id, f"center ({x}, {y})")
            )
        for i, zone in enumerate(layout.no_placement_zones):
            if zone.contains(x, y):
                violations.append(
                    Violation(ViolationKind.NO_PLACEMENT_ZONE, o.id, f"zone {i}")
                )
        if min(o.size) <= 0:
            violations.append(
                Violation(ViolationKind.NON_POSITIVE_SIZE, o.id, f"size {tuple(o.size)}")
            )
    return ValidationReport(tuple(violations))


def check_layout(layout: SceneLayout) -> None:
    """Raise :class:`LayoutValidationError` unless the layout is valid."""
    report = validate_layout(layout)
    if not report.is_valid:
        raise LayoutValidationError(report)
