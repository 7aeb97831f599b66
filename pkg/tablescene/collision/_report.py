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

from itertools import combinations
from typing import NamedTuple
from ..layout import SceneLayout
from ..relations import containment
from ._obb import OrientedBox, obb_intersects


class CollisionReport(NamedTuple):
    colliding_pairs: tuple[tuple[str, str], ...]
    n_total: int
    rate: float

    def to_dict(self) -> dict:
        return {
            "colliding_pairs": [list(p) for p in self.colliding_pairs],
            "n_total": self.n_total,
            "rate": self.rate,
        }


def collision_pairs(layout: SceneLayout, margin: float = 0.0) -> CollisionReport:
    """Collision rate over all unordered object pairs.

    Pairs where either object is "in" the other are intended overlaps and are left
    out of both the colliding count and the total.

    Args:
        layout: Layout to check.
        margin: Required interpenetration before a pair counts (cm).
    """
    objects = sorted(layout.objects, key=lambda o: o.id)
    boxes = {o.id: OrientedBox.from_object(o) for o in objects}
    colliding: list[tuple[str, str]] = []
    n_total = 0
    for a, b in combinations(objects, 2):
        if containment(a, b) or containment(b, a):
            continue
        n_total += 1
        if obb_intersects(boxes[a.id], boxes[b.id], margin):
            colliding.append((a.id, b.id))
    rate = len(colliding) / n_total if n_total > 0 else 0.0
    return CollisionReport(tuple(colliding), n_total, rate)
