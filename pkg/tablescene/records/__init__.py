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

"""Training records, LLM task-info generation and the success-rate metric."""

from ._llm import (
    PromptName,
    load_prompt,
    render_prompt,
    LlmProviderConfig,
    LlmProvider,
    StubLlmProvider,
    HttpLlmProvider,
)
from ._task_info import (
    DEFAULT_FAN_OUT,
    ResponseParseError,
    task_info_from_dict,
    parse_task_info,
    task_info_to_dict,
    task_info_to_json,
    task_info_from_instruction,
    task_infos_from_scene_graph,
    reasoning_context,
)
from ._reasoning import (
    CORE_HEADER,
    ENVIRONMENT_HEADER,
    RELATIONS_HEADER,
    GRAPH_HEADER,
    LAYOUT_HEADER,
    UnknownTaskObjectError,
    object_type,
    type_counts,
    ReasoningRecord,
    build_reasoning_record,
    format_completion,
    reasoning_text,
    serialize_reasoning_record,
    extract_layout_text,
    extract_graph_text,
    build_prompt,
    SftRecord,
    build_sft_record,
    dump_sft_jsonl,
)
from ._metrics import (
    EmptyInputError,
    SuccessReport,
    success_breakdown,
    success_rate,
)

__all__ = [
    "PromptName",
    "load_prompt",
    "render_prompt",
    "LlmProviderConfig",
    "LlmProvider",
    "StubLlmProvider",
    "HttpLlmProvider",
    "DEFAULT_FAN_OUT",
    "ResponseParseError",
    "task_info_from_dict",
    "parse_task_info",
    "task_info_to_dict",
    "task_info_to_json",
    "task_info_from_instruction",
    "task_infos_from_scene_graph",
    "reasoning_context",
    "CORE_HEADER",
    "ENVIRONMENT_HEADER",
    "RELATIONS_HEADER",
    "GRAPH_HEADER",
    "LAYOUT_HEADER",
    "UnknownTaskObjectError",
    "object_type",
    "type_counts",
    "ReasoningRecord",
    "build_reasoning_record",
    "format_completion",
    "reasoning_text",
    "serialize_reasoning_record",
    "extract_layout_text",
    "extract_graph_text",
    "build_prompt",
    "SftRecord",
    "build_sft_record",
    "dump_sft_jsonl",
    "EmptyInputError",
    "SuccessReport",
    "success_breakdown",
    "success_rate",
]
