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

import math
from enum import Enum
from typing import NamedTuple


class CorruptionTag(Enum):
    """Failure mode reproduced by a rejected completion.

    GEOMETRIC_COLLISION:
        Objects moved, turned or resized until they collide.
    RELATION_MISALIGNMENT:
        Scene graph relations removed or replaced by wrong ones.
    OBJECT_REMOVAL:
        Task-relevant objects missing from the layout.
    """

    GEOMETRIC_COLLISION = "geometric_collision"
    RELATION_MISALIGNMENT = "relation_misalignment"
    OBJECT_REMOVAL = "object_removal"


class PerturbationKind(Enum):
    POSITION = "position"
    ROTATION = "rotation"
    SIZE = "size"


class CorruptionConfig(NamedTuple):
    """Options for the negative-layout generators.

    Args:
        select_prob:
            Per-object (per-edge) selection probability; at least one is always selected.
        pos_prob:
            Probability that a selected object is moved.
        rot_prob:
            Probability that a selected object is turned.
        size_prob:
            Probability that a selected object is rescaled.
        max_pos_frac:
            Largest shift as a fraction of the region width (x) and depth (y).
        rot_delta_max:
            Largest rotation change (radians).
        size_scale_range:
            Range of the uniform scale factor.
        relation_flip_vs_remove:
            Probability that a selected edge is flipped rather than removed.
        removal_count_range:
            Candidate numbers of task objects to delete.
    """

    select_prob: float = 0.3
    pos_prob: float = 0.8
    rot_prob: float = 0.1
    size_prob: float = 0.1
    max_pos_frac: float = 0.20
    rot_delta_max: float = math.pi / 2
    size_scale_range: tuple[float, float] = (0.7, 1.3)
    relation_flip_vs_remove: float = 0.5
    removal_count_range: tuple[int, ...] = (1, 2)

    def kind_probabilities(self) -> list[float]:
        return [self.pos_prob, self.rot_prob, self.size_prob]

    def check(self) -> None:
        """Raise ValueError when the options are inconsistent."""
        for name in ("select_prob", "pos_prob", "rot_prob", "size_prob", "relation_flip_vs_remove"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        if self.select_prob == 0.0:
            raise ValueError("select_prob must be positive")
        if not math.isclose(sum(self.kind_probabilities()), 1.0, abs_tol=1e-9):
            raise ValueError("pos_prob + rot_prob + size_prob must equal 1")
        if not 0.0 < self.max_pos_frac <= 1.0:
            raise ValueError(f"max_pos_frac must be in (0, 1], got {self.max_pos_frac}")
        if self.rot_delta_max < 0:
            raise ValueError("rot_delta_max must be non-negative")
        lo, hi = self.size_scale_range
        if not 0.0 < lo <= hi:
            raise ValueError(f"invalid size_scale_range {self.size_scale_range}")
        if not self.removal_count_range or min(self.removal_count_range) < 1:
            raise ValueError("removal_count_range must hold positive counts")
