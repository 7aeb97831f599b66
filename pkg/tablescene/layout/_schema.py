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

"""Wire models of the layout record."""

from typing import Annotated
from pydantic import AfterValidator, BaseModel, ConfigDict, Field
from ._angles import normalize_angle
from ._types import (
    BoxSize,
    ObjectInstance,
    Position,
    RegionRect,
    SceneLayout,
)


def _check_region(v: list[float]) -> list[float]:
    if not (v[0] < v[2] and v[1] < v[3]):
        raise ValueError("region must satisfy x_min < x_max and y_min < y_max")
    return v


RegionField = Annotated[
    list[float],
    Field(min_length=4, max_length=4),
    AfterValidator(_check_region),
]


class _Record(BaseModel):
    # No coercion from strings/bools and no NaN/inf.
    model_config = ConfigDict(strict=True, allow_inf_nan=False, extra="ignore")


class PositionModel(_Record):
    x: float
    y: float
    z: float


class SizeModel(_Record):
    w: float
    d: float
    h: float


class ObjectModel(_Record):
    id: str = Field(min_length=1)
    description: str = Field(min_length=1)
    position: PositionModel
    size: SizeModel
    rotation: float

    def to_instance(self) -> ObjectInstance:
        return ObjectInstance(
            id=self.id,
            description=self.description,
            position=Position(
                float(self.position.x), float(self.position.y), float(self.position.z)
            ),
            size=BoxSize(float(self.size.w), float(self.size.d), float(self.size.h)),
            rotation=normalize_angle(float(self.rotation)),
        )


class LayoutModel(_Record):
    placement_region: RegionField
    no_placement_zones: list[RegionField] = Field(default_factory=list)
    objects: list[ObjectModel] = Field(min_length=1)

    def to_layout(self) -> SceneLayout:
        return SceneLayout(
            placement_region=RegionRect(*(float(v) for v in self.placement_region)),
            objects=tuple(o.to_instance() for o in self.objects),
            no_placement_zones=tuple(
                RegionRect(*(float(v) for v in z)) for z in self.no_placement_zones
            ),
        )
