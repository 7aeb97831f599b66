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

"""Oriented boxes rotated about the vertical axis and the separating-axis test."""

from typing import NamedTuple
import numpy as np
from ..layout import ObjectInstance


class OrientedBox(NamedTuple):
    """Box rotated by ``theta`` around z.

    Args:
        center_xy: Footprint center (cm).
        half_extents: Half width and half depth in the box frame (cm).
        theta: Rotation (radians).
        z_interval: (z_min, z_max) in cm.
    """

    center_xy: tuple[float, float]
    half_extents: tuple[float, float]
    theta: float
    z_interval: tuple[float, float]

    @staticmethod
    def from_object(obj: ObjectInstance) -> "OrientedBox":
        return OrientedBox(
            center_xy=(obj.position.x, obj.position.y),
            half_extents=(0.5 * obj.size.w, 0.5 * obj.size.d),
            theta=obj.rotation,
            z_interval=(obj.z_min, obj.z_max),
        )

    def axes(self) -> np.ndarray:
        """Unit edge normals of the footprint, shape (2, 2)."""
        c, s = np.cos(self.theta), np.sin(self.theta)
        return np.array([[c, s], [-s, c]])

    def corners(self) -> np.ndarray:
        """Footprint corners, shape (4, 2)."""
        hw, hd = self.half_extents
        local = np.array([[hw, hd], [-hw, hd], [-hw, -hd], [hw, -hd]])
        return np.asarray(self.center_xy) + local @ self.axes()


def _interval_overlap(a_min: float, a_max: float, b_min: float, b_max: float) -> float:
    return min(a_max, b_max) - max(a_min, b_min)


def penetration_depth(a: OrientedBox, b: OrientedBox) -> float:
    """Smallest overlap over the z axis and the four footprint edge normals.

    Positive values are the interpenetration depth along the least-overlapping axis;
    negative values are a separating gap.
    """
    depth = _interval_overlap(*a.z_interval, *b.z_interval)
    corners_a = a.corners()
    corners_b = b.corners()
    for axis in np.vstack([a.axes(), b.axes()]):
        proj_a = corners_a @ axis
        proj_b = corners_b @ axis
        depth = min(
            depth,
            _interval_overlap(proj_a.min(), proj_a.max(), proj_b.min(), proj_b.max()),
        )
    return float(depth)


def obb_intersects(a: OrientedBox, b: OrientedBox, margin: float = 0.0) -> bool:
    """Whether two boxes interpenetrate by more than ``margin`` on every axis.

    Examples:
        An axis-aligned 2x2 square at the origin and a 2x2 square rotated by 45
        degrees at (2.9, 0) are separated along x: 1 + sqrt(2) < 2.9.
    """
    return penetration_depth(a, b) > margin
