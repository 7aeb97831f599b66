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

"""Detection of rows of three or more equally spaced objects."""

from enum import Enum
from typing import NamedTuple, Sequence
import numpy as np
from ..layout import ObjectInstance, RegionRect

SPACING_TOLERANCE = 0.10
ROW_BAND_FRACTION = 0.10


class SpacingAxis(Enum):
    X = "x"
    Y = "y"


class SpacingGroup(NamedTuple):
    member_ids: tuple[str, ...]
    axis: SpacingAxis
    mean_gap: float


def _coords(obj: ObjectInstance, axis: SpacingAxis) -> tuple[float, float]:
    """(along-axis, cross-axis) center coordinates."""
    if axis == SpacingAxis.X:
        return obj.position.x, obj.position.y
    return obj.position.y, obj.position.x


def _rows(
    objects: Sequence[ObjectInstance],
    axis: SpacingAxis,
    band: float,
) -> list[list[ObjectInstance]]:
    """Greedy banding on the cross-axis coordinate; each row spans at most ``band``."""
    ordered = sorted(objects, key=lambda o: (_coords(o, axis)[1], o.id))
    rows: list[list[ObjectInstance]] = []
    for o in ordered:
        cross = _coords(o, axis)[1]
        if rows and cross <= _coords(rows[-1][0], axis)[1] + band:
            rows[-1].append(o)
        else:
            rows.append([o])
    return rows


def is_evenly_spaced(gaps: np.ndarray, tol: float) -> bool:
    """max |g_i - mean(g)| <= tol * mean(g), with a positive mean."""
    mean = float(np.mean(gaps))
    if mean <= 0:
        return False
    return float(np.max(np.abs(gaps - mean))) <= tol * mean


def _row_groups(
    row: list[ObjectInstance],
    axis: SpacingAxis,
    tol: float,
) -> list[SpacingGroup]:
    row = sorted(row, key=lambda o: (_coords(o, axis)[0], o.id))
    along = np.array([_coords(o, axis)[0] for o in row])
    gaps = np.diff(along)
    n = len(row)
    candidates = [
        (i, j)
        for i in range(n)
        for j in range(i + 2, n)
        if is_evenly_spaced(gaps[i:j], tol)
    ]
    groups: list[SpacingGroup] = []
    for i, j in candidates:
        # Keep runs not strictly inside another candidate run.
        if any(a <= i and j <= b and (a, b) != (i, j) for a, b in candidates):
            continue
        groups.append(
            SpacingGroup(
                member_ids=tuple(o.id for o in row[i : j + 1]),
                axis=axis,
                mean_gap=float(np.mean(gaps[i:j])),
            )
        )
    return groups


def equally_spaced_groups(
    objects: Sequence[ObjectInstance],
    region: RegionRect,
    tol: float = SPACING_TOLERANCE,
) -> list[SpacingGroup]:
    """Maximal runs of >= 3 objects with near-uniform center spacing along x or y.

    Objects form rows when their cross-axis centers fall within a band of 10% of the
    region's cross-axis extent. Within a row, a run of consecutive objects qualifies
    when every gap is within ``tol`` (relative) of the mean gap.

    Args:
        objects: Objects to inspect.
        region: Placement region, used to size the row band.
        tol: Relative gap tolerance in (0, 1).

    Returns:
        Groups for both axes, sorted by axis then member ids.
    """
    if not 0 < tol < 1:
        raise ValueError(f"tol must be in (0, 1), got {tol}")
    groups: list[SpacingGroup] = []
    for axis in SpacingAxis:
        extent = region.depth if axis == SpacingAxis.X else region.width
        for row in _rows(objects, axis, ROW_BAND_FRACTION * extent):
            if len(row) >= 3:
                groups.extend(_row_groups(row, axis, tol))
    return sorted(groups, key=lambda g: (g.axis.value, g.member_ids))
