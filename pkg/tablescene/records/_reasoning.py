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

"""Reasoning records: object lists, relations, scene graph, then layout.

A serialized record reads::

    Core Task Objects:
    - Mug: 1
    Environment Objects:
    - Book: 2

    <scene description>

    Spatial Relations:
    (Book-0, left of, Mug-0)

    Scene Graph:
    (Book-0, is at, left-center)
    ...

    Layout:
    {"placement_region": ...}
"""

import json
import re
from collections import Counter
from typing import Iterable, NamedTuple, Sequence
from ..layout import SceneLayout, TaskInfo, serialize_layout
from ..relations import DEFAULT_Z_EPSILON, RelationEdge, build_scene_graph, serialize_graph
from ._task_info import task_info_to_json

CORE_HEADER = "Core Task Objects:"
ENVIRONMENT_HEADER = "Environment Objects:"
RELATIONS_HEADER = "Spatial Relations:"
GRAPH_HEADER = "Scene Graph:"
LAYOUT_HEADER = "Layout:"

_INSTANCE_SUFFIX = re.compile(r"-\d+$")


class UnknownTaskObjectError(LookupError):
    """A task-relevant id is not in the layout."""


def object_type(object_id: str) -> str:
    """Instance id without its numeric suffix, e.g. "Dinner Plates-0" -> "Dinner Plates"."""
    return _INSTANCE_SUFFIX.sub("", object_id)


class ReasoningRecord(NamedTuple):
    """Deterministic part of a training completion.

    Args:
        task_info: Task the scene serves.
        core_ids: Objects whose type is the type of a task-relevant object.
        environment_ids: All other objects.
        relations: Relation edges of the layout.
        graph_text: Serialized scene graph.
        layout_text: Canonical layout record.
        scene_description: Free prose kept verbatim; may be empty.
    """

    task_info: TaskInfo
    core_ids: tuple[str, ...]
    environment_ids: tuple[str, ...]
    relations: tuple[RelationEdge, ...]
    graph_text: str
    layout_text: str
    scene_description: str = ""


def type_counts(object_ids: Iterable[str]) -> list[tuple[str, int]]:
    """(type, count) pairs sorted by type."""
    return sorted(Counter(object_type(i) for i in object_ids).items())


def build_reasoning_record(
    layout: SceneLayout,
    task_info: TaskInfo,
    task_relevant_ids: Sequence[str],
    scene_description: str = "",
    z_epsilon: float = DEFAULT_Z_EPSILON,
) -> ReasoningRecord:
    """Assemble a reasoning record from a layout and its task.

    Raises:
        UnknownTaskObjectError: A task-relevant id is not in the layout.
        LayoutValidationError: The layout is invalid.
    """
    ids = layout.object_ids()
    missing = sorted(set(task_relevant_ids) - set(ids))
    if missing:
        raise UnknownTaskObjectError(f"task objects not in layout: {missing}")
    core_types = {object_type(i) for i in task_relevant_ids}
    ordered = sorted(ids)
    graph = build_scene_graph(layout, z_epsilon)
    return ReasoningRecord(
        task_info=task_info,
        core_ids=tuple(i for i in ordered if object_type(i) in core_types),
        environment_ids=tuple(i for i in ordered if object_type(i) not in core_types),
        relations=graph.edges,
        graph_text=serialize_graph(graph),
        layout_text=serialize_layout(layout),
        scene_description=scene_description,
    )


def format_completion(reasoning: str, graph_text: str, layout_text: str) -> str:
    """Reasoning prose, then the scene graph section, then the layout section."""
    parts = [reasoning.strip()] if reasoning.strip() else []
    parts.append(f"{GRAPH_HEADER}\n{graph_text}" if graph_text else GRAPH_HEADER)
    parts.append(f"{LAYOUT_HEADER}\n{layout_text}")
    return "\n\n".join(parts)


def reasoning_text(record: ReasoningRecord) -> str:
    lines = [CORE_HEADER]
    lines += [f"- {t}: {n}" for t, n in type_counts(record.core_ids)]
    lines.append(ENVIRONMENT_HEADER)
    lines += [f"- {t}: {n}" for t, n in type_counts(record.environment_ids)]
    blocks = ["\n".join(lines)]
    if record.scene_description.strip():
        blocks.append(record.scene_description.strip())
    blocks.append("\n".join([RELATIONS_HEADER] + [str(e) for e in record.relations]))
    return "\n\n".join(blocks)


def serialize_reasoning_record(record: ReasoningRecord) -> str:
    return format_completion(reasoning_text(record), record.graph_text, record.layout_text)


def _last_header(text: str, header: str) -> tuple[int, list[str]] | None:
    lines = text.splitlines()
    for i in range(len(lines) - 1, -1, -1):
        if lines[i].strip() == header:
            return i, lines
    return None


def extract_layout_text(text: str) -> str:
    """Text of the last ``Layout:`` section, or the whole text when there is none."""
    found = _last_header(text, LAYOUT_HEADER)
    if found is None:
        return text.strip()
    i, lines = found
    return "\n".join(lines[i + 1 :]).strip()


def extract_graph_text(text: str) -> str | None:
    """Text between the last ``Scene Graph:`` header and the following ``Layout:`` header."""
    found = _last_header(text, GRAPH_HEADER)
    if found is None:
        return None
    i, lines = found
    body: list[str] = []
    for line in lines[i + 1 :]:
        if line.strip() == LAYOUT_HEADER:
            break
        body.append(line)
    return "\n".join(body).strip()


def build_prompt(task_info: TaskInfo, layout: SceneLayout) -> str:
    """Model input: task info plus the placement region and no-placement zones."""
    region = [float(v) for v in layout.placement_region]
    zones = [[float(v) for v in z] for z in layout.no_placement_zones]
    return "\n".join(
        [
            "Task Info:",
            task_info_to_json(task_info),
            f"Placement Region: {json.dumps(region)}",
            f"No-Placement Zones: {json.dumps(zones)}",
        ]
    )


class SftRecord(NamedTuple):
    prompt: str
    completion: str


def build_sft_record(
    layout: SceneLayout,
    task_info: TaskInfo,
    task_relevant_ids: Sequence[str],
    scene_description: str = "",
    z_epsilon: float = DEFAULT_Z_EPSILON,
) -> SftRecord:
    record = build_reasoning_record(
        layout, task_info, task_relevant_ids, scene_description, z_epsilon
    )
    return SftRecord(build_prompt(task_info, layout), serialize_reasoning_record(record))


def dump_sft_jsonl(records: Iterable[SftRecord]) -> str:
    """One ``{"prompt", "completion"}`` object per line."""
    return "".join(
        json.dumps({"prompt": r.prompt, "completion": r.completion}, ensure_ascii=False) + "\n"
        for r in records
    )
