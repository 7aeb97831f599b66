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

"""Layout data model.

Table frame conventions (all lengths in centimeters):
    * origin at the placement-region min corner, +x rightward, +y toward the table back,
      +z up, so "in front of" means smaller y;
    * ``position.x``/``position.y`` are the box center, ``position.z`` is the box bottom;
    * ``rotation`` is the angle around the vertical axis in radians, within [-pi, pi).
"""

import math
import re
from enum import Enum
from typing import NamedTuple


class Position(NamedTuple):
    x: float
    y: float
    z: float


class BoxSize(NamedTuple):
    """Axis-aligned box extents before rotation.

    Args:
        w: Extent along x.
        d: Extent along y.
        h: Extent along z.
    """

    w: float
    d: float
    h: float


class RegionRect(NamedTuple):
    x_min: float
    y_min: float
    x_max: float
    y_max: float

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def depth(self) -> float:
        return self.y_max - self.y_min

    def contains(self, x: float, y: float) -> bool:
        """Boundary-inclusive membership of a point."""
        return self.x_min <= x <= self.x_max and self.y_min <= y <= self.y_max


class ObjectInstance(NamedTuple):
    """A single placed object, i.e. the tuple [position, size, rotation, description].

    Args:
        id:
            Instance name, unique within the layout (e.g. "Mug-0").
        description:
            Free-text description of category, shape and appearance.
        position:
            Footprint center in x, y and box bottom in z.
        size:
            Box extents in the object's own frame.
        rotation:
            Rotation around the vertical axis (radians).
    """

    id: str
    description: str
    position: Position
    size: BoxSize
    rotation: float = 0.0

    @property
    def z_min(self) -> float:
        return self.position.z

    @property
    def z_max(self) -> float:
        return self.position.z + self.size.h

    def footprint_aabb(self) -> RegionRect:
        """Axis-aligned bounding rectangle of the rotated footprint."""
        c = abs(math.cos(self.rotation))
        s = abs(math.sin(self.rotation))
        half_x = 0.5 * (c * self.size.w + s * self.size.d)
        half_y = 0.5 * (s * self.size.w + c * self.size.d)
        return RegionRect(
            self.position.x - half_x,
            self.position.y - half_y,
            self.position.x + half_x,
            self.position.y + half_y,
        )


class SceneLayout(NamedTuple):
    placement_region: RegionRect
    objects: tuple[ObjectInstance, ...]
    no_placement_zones: tuple[RegionRect, ...] = ()

    def object_ids(self) -> list[str]:
        return [o.id for o in self.objects]

    def get(self, object_id: str) -> ObjectInstance:
        for o in self.objects:
            if o.id == object_id:
                return o
        raise KeyError(object_id)


class ActionVerb(Enum):
    """Primitive robot actions available to task plans."""

    Pick = "Pick"
    PlaceOn = "PlaceOn"
    PlaceAt = "PlaceAt"
    Push = "Push"
    RevoluteJointOpen = "RevoluteJointOpen"
    RevoluteJointClose = "RevoluteJointClose"
    PrismaticJointOpen = "PrismaticJointOpen"
    PrismaticJointClose = "PrismaticJointClose"
    Press = "Press"


# Push appears both as Push(obj) and Push(obj, dir, dist).
_ARITY: dict[ActionVerb, tuple[int, ...]] = {verb: (1,) for verb in ActionVerb}
_ARITY[ActionVerb.Push] = (1, 3)

_ACTION_PATTERN = re.compile(r"^\s*([A-Za-z]+)\s*\((.*)\)\s*$", re.DOTALL)

_OPENING = {"(": ")", "[": "]"}


def _split_operands(body: str) -> tuple[str, ...]:
    """Split on commas outside brackets, so ``(30, 40)`` stays one position operand."""
    if not body.strip():
        return ()
    operands: list[str] = []
    closers: list[str] = []
    start = 0
    for i, ch in enumerate(body):
        if ch in _OPENING:
            closers.append(_OPENING[ch])
        elif ch in ")]":
            if not closers or closers.pop() != ch:
                raise ValueError(f"unbalanced brackets in operands: {body!r}")
        elif ch == "," and not closers:
            operands.append(body[start:i].strip())
            start = i + 1
    if closers:
        raise ValueError(f"unbalanced brackets in operands: {body!r}")
    operands.append(body[start:].strip())
    if not all(operands):
        raise ValueError(f"empty operand in {body!r}")
    return tuple(operands)


class PrimitiveAction(NamedTuple):
    verb: ActionVerb
    arguments: tuple[str, ...]

    @staticmethod
    def parse(text: str) -> "PrimitiveAction":
        """Parse ``"Verb(arg, ...)"``.

        Raises:
            ValueError: Unknown verb, malformed call or wrong number of operands.

        Examples:
            >>> PrimitiveAction.parse("Pick(Mug)")
            PrimitiveAction(verb=<ActionVerb.Pick: 'Pick'>, arguments=('Mug',))
        """
        match = _ACTION_PATTERN.match(text)
        if match is None:
            raise ValueError(f"malformed action: {text!r}")
        name, body = match.groups()
        try:
            verb = ActionVerb(name)
        except ValueError:
            raise ValueError(f"unknown action verb: {name!r}") from None
        action = PrimitiveAction(verb, _split_operands(body))
        action.check_arity()
        return action

    def check_arity(self) -> None:
        if len(self.arguments) not in _ARITY[self.verb]:
            raise ValueError(
                f"{self.verb.value} takes {_ARITY[self.verb]} operands, "
                f"got {len(self.arguments)}"
            )

    def __str__(self) -> str:
        return f"{self.verb.value}({', '.join(self.arguments)})"


class TaskInfo(NamedTuple):
    """Structured task information expanded from an instruction.

    Args:
        environment:
            Brief description of the table environment.
        task:
            The instruction itself.
        goals:
            Ordered sub-objectives.
        action_sequence:
            Primitive actions realising the goals.
        objects_cluster:
            Unique object types involved in the task.
    """

    environment: str
    task: str
    goals: tuple[str, ...]
    action_sequence: tuple[PrimitiveAction, ...]
    objects_cluster: tuple[str, ...]
