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

"""Box-level collision checks.

Objects are approximated by their boxes rotated about the vertical axis; mesh-level
signed distances are not computed.
"""

from ._obb import (
    OrientedBox,
    penetration_depth,
    obb_intersects,
)
from ._report import (
    CollisionReport,
    collision_pairs,
)

__all__ = [
    "OrientedBox",
    "penetration_depth",
    "obb_intersects",
    "CollisionReport",
    "collision_pairs",
]
