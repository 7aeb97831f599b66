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

"""Preference pairs from positive layouts.

Each positive record yields two pairs. A pair's rejected completion is the chosen one
with one corruption applied:

- geometric collision: same reasoning and scene graph, perturbed layout;
- relation misalignment: same reasoning and layout, corrupted scene graph;
- object removal: task objects deleted from the layout, scene graph rebuilt.
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Iterable, NamedTuple, Sequence
import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from ..layout import SceneLayout, parse_layout_dict, serialize_layout, validate_layout
from ..records import format_completion
from ..relations import DEFAULT_Z_EPSILON, SceneGraph, build_scene_graph, serialize_graph
from ._config import CorruptionConfig, CorruptionTag
from ._geometry import perturb_geometry
from ._relations import corrupt_relations
from ._removal import remove_task_objects

logger = logging.getLogger(__name__)

PAIRS_PER_RECORD = 2
MAX_PAIR_ATTEMPTS = 8


class DpoRecord(NamedTuple):
    """A positive example.

    Args:
        prompt: Task instruction and input context.
        reasoning: Reasoning prose preceding the scene graph in the completion.
        layout: The preferred layout.
        task_relevant_ids: Ids of the objects the task needs.
    """

    prompt: str
    reasoning: str
    layout: SceneLayout
    task_relevant_ids: tuple[str, ...] = ()


class DpoPair(NamedTuple):
    prompt: str
    chosen: str
    rejected: str
    tag: CorruptionTag
    seed: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "prompt": self.prompt,
            "chosen": self.chosen,
            "rejected": self.rejected,
            "tag": self.tag.value,
            "seed": self.seed,
        }


class DpoDataset(NamedTuple):
    """Generated pairs in record order, and the records left out.

    Args:
        pairs: Two pairs per accepted record.
        skipped: ``(record_index, reason)`` for every record left out.
    """

    pairs: tuple[DpoPair, ...]
    skipped: tuple[tuple[int, str], ...] = ()

    def tag_histogram(self) -> dict[str, int]:
        counts = {tag.value: 0 for tag in CorruptionTag}
        for pair in self.pairs:
            counts[pair.tag.value] += 1
        return counts


class _DpoRecordModel(BaseModel):
    model_config = ConfigDict(strict=True, extra="ignore")

    prompt: str
    reasoning: str = ""
    layout: dict[str, Any]
    task_relevant_ids: list[str] = Field(default_factory=list)


def parse_dpo_record(data: Any) -> DpoRecord:
    """Build a DpoRecord from its decoded JSON line.

    Raises:
        pydantic.ValidationError: Wrong record shape.
        FormatError: The embedded layout is malformed.
    """
    model = _DpoRecordModel.model_validate(data)
    return DpoRecord(
        prompt=model.prompt,
        reasoning=model.reasoning,
        layout=parse_layout_dict(model.layout),
        task_relevant_ids=tuple(model.task_relevant_ids),
    )


def derive_seed(seed: int, record_index: int, pair_index: int) -> int:
    """64-bit seed of one pair, independent of how records are scheduled."""
    state = np.random.SeedSequence([seed, record_index, pair_index]).generate_state(
        1, dtype=np.uint64
    )
    return int(state[0])


def _applicable_tags(graph: SceneGraph, record: DpoRecord) -> list[CorruptionTag]:
    tags = [CorruptionTag.GEOMETRIC_COLLISION]
    if graph.edges:
        tags.append(CorruptionTag.RELATION_MISALIGNMENT)
    if record.task_relevant_ids:
        tags.append(CorruptionTag.OBJECT_REMOVAL)
    return tags


def _draw_tag(
    rng: np.random.Generator, applicable: Sequence[CorruptionTag]
) -> CorruptionTag:
    tags = list(CorruptionTag)
    tag = tags[int(rng.integers(len(tags)))]
    while tag not in applicable:
        logger.debug("strategy %s not applicable, redrawing", tag.value)
        tag = applicable[int(rng.integers(len(applicable)))]
    return tag


def _rejected_completion(
    tag: CorruptionTag,
    record: DpoRecord,
    graph: SceneGraph,
    graph_text: str,
    layout_text: str,
    seed: int,
    cfg: CorruptionConfig,
    z_epsilon: float,
) -> str:
    if tag is CorruptionTag.GEOMETRIC_COLLISION:
        perturbed = perturb_geometry(record.layout, seed, cfg)
        return format_completion(record.reasoning, graph_text, serialize_layout(perturbed))
    if tag is CorruptionTag.RELATION_MISALIGNMENT:
        corrupted = corrupt_relations(graph, seed, cfg)
        return format_completion(record.reasoning, serialize_graph(corrupted), layout_text)
    reduced = remove_task_objects(record.layout, record.task_relevant_ids, seed, cfg)
    reduced_graph = build_scene_graph(reduced, z_epsilon) if reduced.objects else SceneGraph()
    return format_completion(
        record.reasoning, serialize_graph(reduced_graph), serialize_layout(reduced)
    )


def build_record_pairs(
    record_index: int,
    record: DpoRecord,
    seed: int,
    cfg: CorruptionConfig = CorruptionConfig(),
    z_epsilon: float = DEFAULT_Z_EPSILON,
) -> tuple[list[DpoPair], str | None]:
    """Both pairs of one record, or an empty list and the reason it was skipped."""
    report = validate_layout(record.layout)
    if not report.is_valid:
        kinds = sorted({v.kind.value for v in report.violations})
        return [], "invalid layout: " + ", ".join(kinds)
    missing = sorted(set(record.task_relevant_ids) - set(record.layout.object_ids()))
    if missing:
        return [], "unknown task objects: " + ", ".join(missing)

    graph = build_scene_graph(record.layout, z_epsilon)
    graph_text = serialize_graph(graph)
    layout_text = serialize_layout(record.layout)
    chosen = format_completion(record.reasoning, graph_text, layout_text)
    applicable = _applicable_tags(graph, record)

    pairs: list[DpoPair] = []
    for pair_index in range(PAIRS_PER_RECORD):
        pair_seed = derive_seed(seed, record_index, pair_index)
        rng = np.random.default_rng(pair_seed)
        tag = _draw_tag(rng, applicable)
        for _ in range(MAX_PAIR_ATTEMPTS):
            sub_seed = int(rng.integers(np.iinfo(np.int64).max))
            rejected = _rejected_completion(
                tag, record, graph, graph_text, layout_text, sub_seed, cfg, z_epsilon
            )
            if rejected != chosen:
                pairs.append(DpoPair(record.prompt, chosen, rejected, tag, pair_seed))
                break
        else:
            return [], f"{tag.value} corruption left the completion unchanged"
    return pairs, None


def _build_record_pairs_star(args: tuple) -> tuple[list[DpoPair], str | None]:
    return build_record_pairs(*args)


def build_dpo_dataset(
    records: Iterable[DpoRecord],
    seed: int,
    cfg: CorruptionConfig = CorruptionConfig(),
    z_epsilon: float = DEFAULT_Z_EPSILON,
    workers: int = 1,
) -> DpoDataset:
    """Two preference pairs per positive record.

    Strategies and sub-seeds of the two pairs are drawn independently, so both pairs of
    a record may share a strategy. A pair's seed depends only on ``(seed, record index,
    pair index)``; serial and parallel runs give identical pairs in record order.

    Args:
        records: Positive records.
        seed: Global non-negative seed.
        cfg: Corruption options.
        z_epsilon: Slack of the above/below rule (cm).
        workers: Number of worker processes; 1 runs in-process.

    Returns:
        The dataset. Records with invalid layouts or unknown task ids are skipped and
        listed in ``skipped``.
    """
    cfg.check()
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    jobs = [(i, record, seed, cfg, z_epsilon) for i, record in enumerate(records)]
    if workers == 1:
        results = [_build_record_pairs_star(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_build_record_pairs_star, jobs, chunksize=64))

    pairs: list[DpoPair] = []
    skipped: list[tuple[int, str]] = []
    for (index, *_), (record_pairs, reason) in zip(jobs, results):
        if reason is not None:
            logger.warning("skipping record %d: %s", index, reason)
            skipped.append((index, reason))
        pairs.extend(record_pairs)
    return DpoDataset(tuple(pairs), tuple(skipped))


def dump_dpo_jsonl(pairs: Iterable[DpoPair]) -> str:
    """One JSON object per line with keys prompt, chosen, rejected, tag, seed."""
    return "".join(json.dumps(p.to_dict(), ensure_ascii=False) + "\n" for p in pairs)
