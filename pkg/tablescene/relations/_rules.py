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

"""Geometric rules for pairwise spatial relations and coarse quantization.

Conventions:
    dx = x_subject - x_object and dy = y_subject - y_object on footprint centers,
    so "left of" has dx < 0 and "in front of" has dy < 0.
    Horizontal overlap is measured on the AABBs of the rotated footprints and
    normalized by the subject's footprint area; vertical overlap is normalized by
    the subject's height.
"""

import math
from enum import Enum
from ..layout import ObjectInstance, RegionRect, normalize_angle

DISTANCE_FRACTION = 0.4
STACK_OVERLAP = 0.5
CONTAIN_HORIZONTAL = 0.9
CONTAIN_VERTICAL = 0.5
DEFAULT_Z_EPSILON = 1.0


class Relation(Enum):
    LEFT_OF = "left of"
    RIGHT_OF = "right of"
    IN_FRONT_OF = "in front of"
    BEHIND = "behind"
    ABOVE = "above"
    BELOW = "below"
    IN = "in"


HORIZONTAL_RELATIONS = frozenset(
    {Relation.LEFT_OF, Relation.RIGHT_OF, Relation.IN_FRONT_OF, Relation.BEHIND}
)
VERTICAL_RELATIONS = frozenset({Relation.ABOVE, Relation.BELOW})


class FacingBin(Enum):
    FRONT = "front"
    FRONT_RIGHT = "front_right"
    RIGHT = "right"
    BACK_RIGHT = "back_right"
    BACK = "back"
    BACK_LEFT = "back_left"
    LEFT = "left"
    FRONT_LEFT = "front_left"


class GridCell(Enum):
    CENTER = "center"
    FRONT = "front"
    BACK = "back"
    LEFT_CENTER = "left-center"
    RIGHT_CENTER = "right-center"
    LEFT_FRONT = "left-front"
    RIGHT_FRONT = "right-front"
    LEFT_BACK = "left-back"
    RIGHT_BACK = "right-back"


class OutOfRegionError(ValueError):
    pass


# [lower, upper) bounds; "back" wraps around +-pi and is the fall-through.
_FACING_TABLE: tuple[tuple[float, float, FacingBin], ...] = (
    (-math.pi / 8, math.pi / 8, FacingBin.FRONT),
    (math.pi / 8, 3 * math.pi / 8, FacingBin.FRONT_RIGHT),
    (3 * math.pi / 8, 5 * math.pi / 8, FacingBin.RIGHT),
    (5 * math.pi / 8, 7 * math.pi / 8, FacingBin.BACK_RIGHT),
    (-7 * math.pi / 8, -5 * math.pi / 8, FacingBin.BACK_LEFT),
    (-5 * math.pi / 8, -3 * math.pi / 8, FacingBin.LEFT),
    (-3 * math.pi / 8, -math.pi / 8, FacingBin.FRONT_LEFT),
)

# (column, row) with columns left/center/right and rows front/middle/back.
_GRID_TABLE: dict[tuple[int, int], GridCell] = {
    (0, 0): GridCell.LEFT_FRONT,
    (1, 0): GridCell.FRONT,
    (2, 0): GridCell.RIGHT_FRONT,
    (0, 1): GridCell.LEFT_CENTER,
    (1, 1): GridCell.CENTER,
    (2, 1): GridCell.RIGHT_CENTER,
    (0, 2): GridCell.LEFT_BACK,
    (1, 2): GridCell.BACK,
    (2, 2): GridCell.RIGHT_BACK,
}


def distance_threshold(region: RegionRect) -> float:
    return DISTANCE_FRACTION * max(region.width, region.depth)


def horizontal_relation(
    subject: ObjectInstance,
    obj: ObjectInstance,
    region: RegionRect,
) -> Relation | None:
    """Left of / right of / in front of / behind from centroid offsets.

    Returns None on a tie |dx| = |dy| or when the centroids are farther apart than
    0.4 * max(table width, table depth).

    Examples:
        Region [0, 0, 100, 100], subject at (30, 50), object at (60, 50):
        dx = -30, distance 30 <= 40, so the result is ``Relation.LEFT_OF``.
    """
    dx = subject.position.x - obj.position.x
    dy = subject.position.y - obj.position.y
    if math.hypot(dx, dy) > distance_threshold(region):
        return None
    if abs(dx) > abs(dy):
        return Relation.LEFT_OF if dx < 0 else Relation.RIGHT_OF
    if abs(dy) > abs(dx):
        return Relation.IN_FRONT_OF if dy < 0 else Relation.BEHIND
    return None


def footprint_overlap(subject: ObjectInstance, obj: ObjectInstance) -> float:
    """Intersection area of the footprint AABBs over the subject's AABB area."""
    a = subject.footprint_aabb()
    b = obj.footprint_aabb()
    ix = min(a.x_max, b.x_max) - max(a.x_min, b.x_min)
    iy = min(a.y_max, b.y_max) - max(a.y_min, b.y_min)
    area = a.width * a.depth
    if ix <= 0 or iy <= 0 or area <= 0:
        return 0.0
    return ix * iy / area


def vertical_overlap(subject: ObjectInstance, obj: ObjectInstance) -> float:
    """Length of the shared z-interval over the subject's height."""
    overlap = min(subject.z_max, obj.z_max) - max(subject.z_min, obj.z_min)
    if overlap <= 0 or subject.size.h <= 0:
        return 0.0
    return overlap / subject.size.h


def vertical_relation(
    subject: ObjectInstance,
    obj: ObjectInstance,
    z_epsilon: float = DEFAULT_Z_EPSILON,
) -> Relation | None:
    """Above / below for pairs with at least half the subject footprint overlapping.

    Above takes precedence when both predicates hold, which only happens for boxes
    thinner than ``z_epsilon``.
    """
    if z_epsilon < 0:
        raise ValueError(f"z_epsilon must be non-negative, got {z_epsilon}")
    if footprint_overlap(subject, obj) < STACK_OVERLAP:
        return None
    if subject.z_min > obj.z_max - z_epsilon:
        return Relation.ABOVE
    if subject.z_max < obj.z_min + z_epsilon:
        return Relation.BELOW
    return None


def containment(subject: ObjectInstance, obj: ObjectInstance) -> bool:
    """Whether the subject is "in" the object."""
    return (
        footprint_overlap(subject, obj) >= CONTAIN_HORIZONTAL
        and vertical_overlap(subject, obj) >= CONTAIN_VERTICAL
    )


def face_direction(theta: float) -> FacingBin:
    """Quantize a rotation into one of eight 45-degree facing bins.

    Examples:
        >>> face_direction(0.0)
        <FacingBin.FRONT: 'front'>
        >>> face_direction(-math.pi)
        <FacingBin.BACK: 'back'>
    """
    theta = normalize_angle(theta)
    for lower, upper, facing in _FACING_TABLE:
        if lower <= theta < upper:
            return facing
    return FacingBin.BACK


def grid_position(obj: ObjectInstance, region: RegionRect) -> GridCell:
    """Cell of the 3x3 table grid holding the object's footprint center.

    Raises:
        OutOfRegionError: The center is outside the region.
    """
    x, y = obj.position.x, obj.position.y
    if not region.contains(x, y):
        raise OutOfRegionError(f"{obj.id} center ({x}, {y}) is outside {tuple(region)}")
    column = min(int(3 * (x - region.x_min) / region.width), 2)
    row = min(int(3 * (y - region.y_min) / region.depth), 2)
    return _GRID_TABLE[(column, row)]
