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

"""
Utility functions common to all tests.
"""

import json
import math
from itertools import permutations
import numpy as np
from tablescene.layout import (
    BoxSize,
    ObjectInstance,
    Position,
    RegionRect,
    SceneLayout,
    layout_to_dict,
)

REGION_100 = RegionRect(0.0, 0.0, 100.0, 100.0)


def box(
    object_id: str,
    x: float,
    y: float,
    z: float = 0.0,
    w: float = 10.0,
    d: float = 10.0,
    h: float = 10.0,
    rotation: float = 0.0,
    description: str | None = None,
) -> ObjectInstance:
    return ObjectInstance(
        id=object_id,
        description=description or f"a {object_id.lower()}",
        position=Position(x, y, z),
        size=BoxSize(w, d, h),
        rotation=rotation,
    )


def make_layout(
    *objects: ObjectInstance,
    region: RegionRect = REGION_100,
    zones: tuple[RegionRect, ...] = (),
) -> SceneLayout:
    return SceneLayout(placement_region=region, objects=tuple(objects), no_placement_zones=zones)


def layout_json(layout: SceneLayout) -> str:
    """Record text in input object order (not canonicalized)."""
    return json.dumps(layout_to_dict(layout))


def _footprint_bounds(o: ObjectInstance) -> tuple[float, float, float, float]:
    c, s = math.cos(o.rotation), math.sin(o.rotation)
    hw, hd = o.size.w / 2, o.size.d / 2
    xs = [o.position.x + c * u - s * v for u in (-hw, hw) for v in (-hd, hd)]
    ys = [o.position.y + s * u + c * v for u in (-hw, hw) for v in (-hd, hd)]
    return min(xs), min(ys), max(xs), max(ys)


def _overlap_fraction(a: ObjectInstance, b: ObjectInstance) -> float:
    ax0, ay0, ax1, ay1 = _footprint_bounds(a)
    bx0, by0, bx1, by1 = _footprint_bounds(b)
    ix = max(0.0, min(ax1, bx1) - max(ax0, bx0))
    iy = max(0.0, min(ay1, by1) - max(ay0, by0))
    return ix * iy / ((ax1 - ax0) * (ay1 - ay0))


def brute_force_edges(layout: SceneLayout, z_epsilon: float = 1.0) -> set[tuple[str, str, str]]:
    """Every (subject, relation, object) triple, enumerated straight from the rule table."""
    region = layout.placement_region
    limit = 0.4 * max(region.x_max - region.x_min, region.y_max - region.y_min)
    out: set[tuple[str, str, str]] = set()
    for s, o in permutations(layout.objects, 2):
        dx = s.position.x - o.position.x
        dy = s.position.y - o.position.y
        if math.sqrt(dx * dx + dy * dy) <= limit:
            if abs(dx) > abs(dy):
                out.add((s.id, "left of" if dx < 0 else "right of", o.id))
            elif abs(dy) > abs(dx):
                out.add((s.id, "in front of" if dy < 0 else "behind", o.id))
        overlap = _overlap_fraction(s, o)
        s_top, o_top = s.position.z + s.size.h, o.position.z + o.size.h
        if overlap >= 0.5:
            if s.position.z > o_top - z_epsilon:
                out.add((s.id, "above", o.id))
            elif s_top < o.position.z + z_epsilon:
                out.add((s.id, "below", o.id))
        shared_z = min(s_top, o_top) - max(s.position.z, o.position.z)
        if overlap >= 0.9 and shared_z / s.size.h >= 0.5:
            out.add((s.id, "in", o.id))
    return out


def inside_box(points: np.ndarray, o: ObjectInstance) -> np.ndarray:
    """Membership of (n, 3) points in the rotated box of ``o``."""
    c, s = math.cos(o.rotation), math.sin(o.rotation)
    dx = points[:, 0] - o.position.x
    dy = points[:, 1] - o.position.y
    u = c * dx + s * dy
    v = -s * dx + c * dy
    return (
        (np.abs(u) <= o.size.w / 2)
        & (np.abs(v) <= o.size.d / 2)
        & (points[:, 2] >= o.position.z)
        & (points[:, 2] <= o.position.z + o.size.h)
    )


def sampled_overlap(
    a: ObjectInstance, b: ObjectInstance, rng: np.random.Generator, n_samples: int = 50_000
) -> bool:
    """Monte-Carlo oracle: some sample inside the shared bounding volume lies in both boxes."""
    ax0, ay0, ax1, ay1 = _footprint_bounds(a)
    bx0, by0, bx1, by1 = _footprint_bounds(b)
    lo = np.array([max(ax0, bx0), max(ay0, by0), max(a.position.z, b.position.z)])
    hi = np.array(
        [
            min(ax1, bx1),
            min(ay1, by1),
            min(a.position.z + a.size.h, b.position.z + b.size.h),
        ]
    )
    if np.any(hi <= lo):
        return False
    points = rng.uniform(lo, hi, size=(n_samples, 3))
    return bool(np.any(inside_box(points, a) & inside_box(points, b)))


def random_box(rng: np.random.Generator, object_id: str, spread: float = 20.0) -> ObjectInstance:
    return box(
        object_id,
        x=float(rng.uniform(0, spread)),
        y=float(rng.uniform(0, spread)),
        z=float(rng.uniform(0, 5)),
        w=float(rng.uniform(1, 15)),
        d=float(rng.uniform(1, 15)),
        h=float(rng.uniform(1, 10)),
        rotation=float(rng.uniform(-math.pi, math.pi)),
    )
