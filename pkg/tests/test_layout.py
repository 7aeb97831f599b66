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

import json
import math
import numpy as np
import pytest
from tablescene.layout import (
    ActionVerb,
    FormatError,
    FormatErrorKind,
    LayoutValidationError,
    PrimitiveAction,
    RegionRect,
    ViolationKind,
    canonicalize_layout,
    check_layout,
    layout_to_dict,
    normalize_angle,
    parse_layout,
    random_layout,
    serialize_layout,
    validate_layout,
)
from utils import box, layout_json, make_layout


def _record(**overrides) -> dict:
    data = {
        "placement_region": [0.0, 0.0, 100.0, 100.0],
        "no_placement_zones": [],
        "objects": [
            {
                "id": "Mug-0",
                "description": "white mug",
                "position": {"x": 10.0, "y": 20.0, "z": 0.0},
                "size": {"w": 8.0, "d": 8.0, "h": 10.0},
                "rotation": 0.0,
            }
        ],
    }
    data.update(overrides)
    return data


def test_parse_minimal_record() -> None:
    layout = parse_layout(json.dumps(_record()))
    assert len(layout.objects) == 1
    mug = layout.get("Mug-0")
    assert mug.position.x == 10.0
    assert mug.size.h == 10.0
    assert layout.placement_region == RegionRect(0.0, 0.0, 100.0, 100.0)


def test_parse_missing_position() -> None:
    data = _record()
    del data["objects"][0]["position"]
    with pytest.raises(FormatError) as info:
        parse_layout(json.dumps(data))
    assert info.value.kind == FormatErrorKind.MISSING_FIELD
    assert info.value.field == "objects[0].position"


def test_parse_empty_object_list() -> None:
    with pytest.raises(FormatError) as info:
        parse_layout(json.dumps(_record(objects=[])))
    assert info.value.kind == FormatErrorKind.EMPTY_OBJECT_LIST


def test_parse_non_finite() -> None:
    text = json.dumps(_record()).replace('"x": 10.0', '"x": NaN')
    with pytest.raises(FormatError) as info:
        parse_layout(text)
    assert info.value.kind == FormatErrorKind.NON_FINITE_NUMBER

    text = json.dumps(_record()).replace('"h": 10.0', '"h": Infinity')
    with pytest.raises(FormatError) as info:
        parse_layout(text)
    assert info.value.kind == FormatErrorKind.NON_FINITE_NUMBER


def test_parse_malformed() -> None:
    for text in ["{not json", "[1, 2, 3]", "", json.dumps(_record(placement_region=[0, 0, 1]))]:
        with pytest.raises(FormatError) as info:
            parse_layout(text)
        assert info.value.kind == FormatErrorKind.MALFORMED_SYNTAX

    # no coercion of strings into numbers
    text = json.dumps(_record()).replace('"x": 10.0', '"x": "10.0"')
    with pytest.raises(FormatError) as info:
        parse_layout(text)
    assert info.value.kind == FormatErrorKind.MALFORMED_SYNTAX


def test_missing_region_is_missing_field() -> None:
    data = _record()
    del data["placement_region"]
    with pytest.raises(FormatError) as info:
        parse_layout(json.dumps(data))
    assert info.value.kind == FormatErrorKind.MISSING_FIELD
    assert info.value.field == "placement_region"


def test_serialize_normalizes_rotation() -> None:
    layout = make_layout(box("Lamp", 50, 50, rotation=3 * math.pi / 2))
    data = json.loads(serialize_layout(layout))
    assert data["objects"][0]["rotation"] == pytest.approx(-math.pi / 2, abs=1e-12)


def test_serialize_sorts_objects() -> None:
    a, b, c = box("Cup", 10, 10), box("Bowl", 30, 30), box("Apple", 60, 60)
    assert serialize_layout(make_layout(a, b, c)) == serialize_layout(make_layout(c, a, b))
    ids = [o["id"] for o in json.loads(serialize_layout(make_layout(a, b, c)))["objects"]]
    assert ids == ["Apple", "Bowl", "Cup"]


def test_serialize_key_order() -> None:
    data = json.loads(serialize_layout(make_layout(box("Cup", 10, 10))))
    assert list(data) == ["placement_region", "no_placement_zones", "objects"]
    assert list(data["objects"][0]) == ["id", "description", "position", "size", "rotation"]


def test_round_trip_random_layouts() -> None:
    rng = np.random.default_rng(7)
    for i in range(500):
        layout = random_layout(rng, int(rng.integers(1, 16)))
        if i % 5 == 0:
            layout = layout._replace(no_placement_zones=(RegionRect(100.0, 60.0, 120.0, 80.0),))
        text = serialize_layout(layout)
        parsed = parse_layout(text)
        assert parsed == canonicalize_layout(layout)
        assert serialize_layout(parsed) == text


def test_parse_keeps_input_order() -> None:
    layout = make_layout(box("Cup", 10, 10), box("Apple", 30, 30))
    assert parse_layout(layout_json(layout)).object_ids() == ["Cup", "Apple"]
    assert layout_to_dict(parse_layout(layout_json(layout))) == layout_to_dict(layout)


def test_normalize_angle() -> None:
    assert normalize_angle(0.0) == 0.0
    assert normalize_angle(math.pi) == -math.pi
    assert normalize_angle(-math.pi) == -math.pi
    assert normalize_angle(3 * math.pi / 2) == pytest.approx(-math.pi / 2, abs=1e-12)
    assert normalize_angle(-3 * math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-12)
    with pytest.raises(ValueError):
        normalize_angle(float("nan"))
    with pytest.raises(ValueError):
        normalize_angle(float("inf"))


def test_normalize_angle_properties() -> None:
    rng = np.random.default_rng(3)
    for theta in rng.uniform(-50, 50, 2000):
        value = normalize_angle(float(theta))
        assert -math.pi <= value < math.pi
        assert normalize_angle(value) == value
        # same angle modulo 2 pi
        assert math.cos(value) == pytest.approx(math.cos(theta), abs=1e-9)
        assert math.sin(value) == pytest.approx(math.sin(theta), abs=1e-9)
        shifted = normalize_angle(float(theta) + 2 * math.pi)
        gap = abs(shifted - value)
        assert min(gap, 2 * math.pi - gap) < 1e-9


def test_validate_layout() -> None:
    sink = RegionRect(70.0, 70.0, 100.0, 100.0)
    layout = make_layout(box("Cup", 10, 10), box("Bowl", 40, 40), zones=(sink,))
    assert validate_layout(layout).is_valid
    check_layout(layout)

    in_sink = make_layout(box("Cup", 10, 10), box("Plate", 80, 85), zones=(sink,))
    report = validate_layout(in_sink)
    assert report.ids(ViolationKind.NO_PLACEMENT_ZONE) == ["Plate"]
    assert len(report.violations) == 1

    outside = make_layout(box("Cup", 101, 50))
    assert validate_layout(outside).ids(ViolationKind.OUT_OF_REGION) == ["Cup"]
    with pytest.raises(LayoutValidationError):
        check_layout(outside)


def test_validate_sizes_and_duplicates() -> None:
    layout = make_layout(box("Cup", 10, 10, w=0.0), box("Cup", 50, 50), box("Pen", 60, 60, h=-1))
    report = validate_layout(layout)
    assert report.ids(ViolationKind.NON_POSITIVE_SIZE) == ["Cup", "Pen"]
    assert report.ids(ViolationKind.DUPLICATE_ID) == ["Cup", "Cup"]


def test_region_boundary_is_inside() -> None:
    assert validate_layout(make_layout(box("Cup", 100, 0))).is_valid


def test_primitive_action_parse() -> None:
    action = PrimitiveAction.parse("Pick(Mug)")
    assert action.verb == ActionVerb.Pick
    assert action.arguments == ("Mug",)
    assert str(action) == "Pick(Mug)"

    push = PrimitiveAction.parse("Push(Box, left, 10)")
    assert push.arguments == ("Box", "left", "10")
    assert PrimitiveAction.parse("Push(Box)").verb == ActionVerb.Push
    assert len(ActionVerb) == 9

    for bad in [
        "Teleport(Mug)",
        "Pick(Mug, Bowl)",
        "Pick",
        "PlaceOn()",
        "Push(A, B)",
        "Pick(Mug,)",
        "PlaceAt((30, 40)",
        "PlaceAt([30, 40))",
    ]:
        with pytest.raises(ValueError):
            PrimitiveAction.parse(bad)


def test_primitive_action_position_operands() -> None:
    place = PrimitiveAction.parse("PlaceAt((30, 40))")
    assert place.verb == ActionVerb.PlaceAt
    assert place.arguments == ("(30, 40)",)
    assert str(place) == "PlaceAt((30, 40))"

    place = PrimitiveAction.parse("PlaceAt([30, 40, 0])")
    assert place.arguments == ("[30, 40, 0]",)

    push = PrimitiveAction.parse("Push(Box, (1, 0), 10)")
    assert push.arguments == ("Box", "(1, 0)", "10")
