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

TWO_PI = 2.0 * math.pi


def normalize_angle(theta: float) -> float:
    """Map an angle onto the half-open interval [-pi, pi).

    Angles already in range are returned unchanged, which keeps the map idempotent
    in floating point.

    Examples:
        >>> normalize_angle(math.pi)
        -3.141592653589793
        >>> normalize_angle(0.0)
        0.0
    """
    if not math.isfinite(theta):
        raise ValueError(f"angle must be finite, got {theta}")
    if -math.pi <= theta < math.pi:
        return theta
    val = math.fmod(theta + math.pi, TWO_PI)
    if val < 0:
        val += TWO_PI
    val -= math.pi
    if val >= math.pi:
        val -= TWO_PI
    return val
