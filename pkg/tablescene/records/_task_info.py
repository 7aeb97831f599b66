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

"""Task info: the structured expansion of a task instruction.

Wire form, as requested from the LLM::

    {"Environment": "...", "Task": "...", "Goal": ["..."],
     "Action Sequence": ["Pick(Mug)", "PlaceOn(Tray)"], "Objects cluster": ["Mug", "Tray"]}
"""

import json
import logging
from typing import Any
from pydantic import BaseModel, ConfigDict, Field, ValidationError
from ..layout import PrimitiveAction, TaskInfo
from ._llm import LlmProvider, PromptName, render_prompt

logger = logging.getLogger(__name__)

DEFAULT_FAN_OUT = 5


class ResponseParseError(ValueError):
    """A provider response is not valid task info."""


class _TaskInfoModel(BaseModel):
    model_config = ConfigDict(strict=True, extra="ignore", populate_by_name=True)

    environment: str = Field(alias="Environment")
    task: str = Field(alias="Task", min_length=1)
    goals: list[str] = Field(alias="Goal")
    action_sequence: list[str] = Field(alias="Action Sequence")
    objects_cluster: list[str] = Field(alias="Objects cluster")


def _json_body(text: str) -> str:
    start = text.find("{")
    end = text.rfind("}")
    if start < 0 or end < start:
        raise ResponseParseError("response holds no JSON object")
    return text[start : end + 1]


def task_info_from_dict(data: Any) -> TaskInfo:
    """Validate decoded task info.

    Raises:
        ResponseParseError: A field is missing or mistyped, an action uses an unknown
            verb or wrong arity, or an object type repeats in the cluster.
    """
    try:
        model = _TaskInfoModel.model_validate(data)
    except ValidationError as exc:
        raise ResponseParseError(str(exc)) from exc
    try:
        actions = tuple(PrimitiveAction.parse(a) for a in model.action_sequence)
    except ValueError as exc:
        raise ResponseParseError(str(exc)) from exc
    if len(set(model.objects_cluster)) != len(model.objects_cluster):
        raise ResponseParseError("object types in 'Objects cluster' must be unique")
    return TaskInfo(
        environment=model.environment,
        task=model.task,
        goals=tuple(model.goals),
        action_sequence=actions,
        objects_cluster=tuple(model.objects_cluster),
    )


def parse_task_info(text: str) -> TaskInfo:
    """Parse an LLM response; surrounding prose and code fences are ignored."""
    try:
        data = json.loads(_json_body(text))
    except json.JSONDecodeError as exc:
        raise ResponseParseError(f"response is not JSON: {exc}") from exc
    return task_info_from_dict(data)


def task_info_to_dict(info: TaskInfo) -> dict[str, Any]:
    return {
        "Environment": info.environment,
        "Task": info.task,
        "Goal": list(info.goals),
        "Action Sequence": [str(a) for a in info.action_sequence],
        "Objects cluster": list(info.objects_cluster),
    }


def task_info_to_json(info: TaskInfo) -> str:
    return json.dumps(task_info_to_dict(info), ensure_ascii=False)


def task_info_from_instruction(instruction: str, provider: LlmProvider) -> TaskInfo:
    """Expand an instruction into task info through an LLM.

    Raises:
        ProviderUnavailable: The provider failed.
        ResponseParseError: The response is not valid task info.
    """
    prompt = render_prompt(PromptName.TASK_INFO, task=instruction)
    return parse_task_info(provider.complete(prompt))


def task_infos_from_scene_graph(
    graph_text: str,
    description: str,
    provider: LlmProvider,
    fan_out: int = DEFAULT_FAN_OUT,
) -> list[TaskInfo]:
    """Ask for ``fan_out`` tasks a robot could perform in a scene.

    Responses that fail to parse are dropped with a warning.

    Raises:
        ValueError: ``fan_out`` < 1.
        ProviderUnavailable: The provider failed.
    """
    if fan_out < 1:
        raise ValueError(f"fan_out must be >= 1, got {fan_out}")
    prompt = render_prompt(
        PromptName.TASK_FROM_SCENE_GRAPH, scene_graph=graph_text, description=description
    )
    infos: list[TaskInfo] = []
    for i in range(fan_out):
        try:
            infos.append(parse_task_info(provider.complete(prompt)))
        except ResponseParseError as exc:
            logger.warning("dropping task %d of %d: %s", i + 1, fan_out, exc)
    return infos


def reasoning_context(info: TaskInfo, graph_text: str, provider: LlmProvider) -> str:
    """Reasoning prose for a record, returned verbatim."""
    prompt = render_prompt(
        PromptName.REASONING_CONTEXT,
        task_goal_object=task_info_to_json(info),
        scene_graph=graph_text,
    )
    return provider.complete(prompt)
