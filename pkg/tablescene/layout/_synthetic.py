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

"""Seeded synthetic tabletop layouts (collision-free, every object resting on the table)."""

import logging
from collections import Counter
import numpy as np
from ._types import (
    BoxSize,
    ObjectInstance,
    Position,
    RegionRect,
    SceneLayout,
)

logger = logging.getLogger(__name__)

DEFAULT_REGION = RegionRect(0.0, 0.0, 120.0, 80.0)

# (type, description, nominal size w, d, h in cm)
TABLETOP_ITEMS: tuple[tuple[str, str, tuple[float, float, float]], ...] = (
    ("Mug", "white ceramic coffee mug", (9.0, 8.0, 10.0)),
    ("Bowl", "shallow wooden salad bowl", (18.0, 18.0, 7.0)),
    ("Plate", "round porcelain dinner plate", (26.0, 26.0, 2.5)),
    ("Book", "hardcover book with a blue cover", (16.0, 23.0, 3.0)),
    ("Lamp", "small desk lamp with a metal shade", (15.0, 15.0, 40.0)),
    ("Laptop", "silver laptop, lid open", (32.0, 22.0, 20.0)),
    ("Pen", "black ballpoint pen", (14.0, 1.2, 1.2)),
    ("Bottle", "clear plastic water bottle", (7.0, 7.0, 22.0)),
    ("Tray", "rectangular serving tray", (40.0, 28.0, 3.0)),
    ("Apple", "red apple", (8.0, 8.0, 8.0)),
    ("Notebook", "spiral-bound paper notebook", (15.0, 21.0, 1.5)),
    ("Phone", "smartphone lying face up", (7.5, 15.5, 0.8)),
)


def _disjoint(a: RegionRect, b: RegionRect, clearance: float) -> bool:
    return (
        a.x_max + clearance <= b.x_min
        or b.x_max + clearance <= a.x_min
        or a.y_max + clearance <= b.y_min
        or b.y_max + clearance <= a.y_min
    )


def random_layout(
    rng: np.random.Generator,
    n_objects: int,
    region: RegionRect = DEFAULT_REGION,
    scale_jitter: float = 0.2,
    clearance: float = 0.5,
    max_tries: int = 200,
) -> SceneLayout:
    """Sample a collision-free layout by rejection.

    Footprint AABBs are kept ``clearance`` apart, which rules out any box overlap
    whatever the rotations. Objects that cannot be placed within ``max_tries`` draws
    are dropped, so the result may hold fewer than ``n_objects`` objects.

    Args:
        rng: Random generator (the only source of randomness).
        n_objects: Requested number of objects.
        region: Placement region.
        scale_jitter: Relative size jitter around the nominal item size.
        clearance: Minimum footprint gap (cm).
        max_tries: Placement attempts per object.
    """
    objects: list[ObjectInstance] = []
    footprints: list[RegionRect] = []
    type_counts: Counter = Counter()
    for _ in range(n_objects):
        name, description, nominal = TABLETOP_ITEMS[rng.integers(len(TABLETOP_ITEMS))]
        scale = 1.0 + rng.uniform(-scale_jitter, scale_jitter)
        size = BoxSize(*(float(v * scale) for v in nominal))
        for _ in range(max_tries):
            rotation = float(rng.uniform(-np.pi, np.pi))
            x = float(rng.uniform(region.x_min, region.x_max))
            y = float(rng.uniform(region.y_min, region.y_max))
            candidate = ObjectInstance(
                id="",
                description=description,
                position=Position(x, y, 0.0),
                size=size,
                rotation=rotation,
            )
            footprint = candidate.footprint_aabb()
            if all(_disjoint(footprint, f, clearance) for f in footprints):
                break
        else:
            logger.debug("Could not place a %s after %d tries.", name, max_tries)
            continue
        candidate = candidate._replace(id=f"{name}-{type_counts[name]}")
        type_counts[name] += 1
        objects.append(candidate)
        footprints.append(footprint)
    return SceneLayout(placement_region=region, objects=tuple(objects))
