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

"""Batch commands behind the ``tablescene`` entry point.

Every command reads whole input files, writes nothing until all lines succeed and
then writes its output atomically (or to standard output).
"""

import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, Literal, Sequence, TypeVar
from pydantic import BaseModel, ConfigDict, Field, ValidationError
from ..collision import collision_pairs
from ..corrupt import build_dpo_dataset, dump_dpo_jsonl, parse_dpo_record
from ..layout import (
    BoxSize,
    FormatError,
    LayoutValidationError,
    SceneLayout,
    parse_layout,
    parse_layout_dict,
    validate_layout,
)
from ..records import (
    HttpLlmProvider,
    LlmProvider,
    LlmProviderConfig,
    SftRecord,
    ResponseParseError,
    StubLlmProvider,
    UnknownTaskObjectError,
    build_sft_record,
    dump_sft_jsonl,
    extract_graph_text,
    extract_layout_text,
    success_breakdown,
    task_info_from_dict,
    task_info_from_instruction,
)
from ..relations import build_scene_graph, edge_holds, parse_graph, serialize_graph
from ..retrieval import (
    RetrievalTarget,
    isometric_scale,
    load_catalog,
    provider_from_env,
    retrieve_top_k,
)
from ._config import CliConfig
from ._io import read_jsonl_lines, write_output

logger = logging.getLogger(__name__)

T = TypeVar("T")


class InputError(ValueError):
    """One or more input lines are unusable; messages carry line numbers."""

    def __init__(self, messages: list[str]) -> None:
        super().__init__("\n".join(messages))
        self.messages = messages


def _diagnose(message: str) -> None:
    print(message, file=sys.stderr)


def make_llm_provider(cfg: CliConfig) -> LlmProvider:
    if cfg.provider == "stub":
        return StubLlmProvider(cfg.stub_responses)
    if not cfg.endpoint:
        raise InputError(["--endpoint is required with --provider http"])
    return HttpLlmProvider(
        LlmProviderConfig(endpoint=cfg.endpoint, model=cfg.model, timeout=cfg.timeout)
    )


def _ordered_map(fn: Callable[..., T], items: Sequence[tuple], workers: int) -> list[T]:
    """``fn(*item)`` for every item on a thread pool, results in input order."""
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda item: fn(*item), items))


def _graph_line(lineno: int, line: str, cfg: CliConfig) -> tuple[str | None, str | None]:
    try:
        graph = build_scene_graph(parse_layout(line), cfg.z_epsilon)
    except (FormatError, LayoutValidationError) as exc:
        return None, f"line {lineno}: {exc}"
    return json.dumps(serialize_graph(graph), ensure_ascii=False) + "\n", None


def cmd_extract_graph(input_path: str | Path, output_path: str | Path | None, cfg: CliConfig) -> None:
    """One JSON-encoded serialized scene graph per input layout line."""
    lines = read_jsonl_lines(input_path)
    results = _ordered_map(lambda n, s: _graph_line(n, s, cfg), lines, cfg.workers)
    errors = [e for _, e in results if e is not None]
    if errors:
        raise InputError(errors)
    out = [text for text, _ in results]
    write_output(output_path, "".join(out))
    logger.info("extracted %d scene graphs", len(out))


def cmd_build_dpo(input_path: str | Path, output_path: str | Path | None, cfg: CliConfig) -> None:
    """Two preference pairs per positive record; summary on the error stream."""
    records = []
    errors: list[str] = []
    for lineno, line in read_jsonl_lines(input_path):
        try:
            records.append(parse_dpo_record(json.loads(line)))
        except (json.JSONDecodeError, ValidationError, FormatError) as exc:
            errors.append(f"line {lineno}: {exc}")
    if errors:
        raise InputError(errors)
    dataset = build_dpo_dataset(records, cfg.seed, z_epsilon=cfg.z_epsilon, workers=cfg.workers)
    write_output(output_path, dump_dpo_jsonl(dataset.pairs))
    summary = {
        "pairs": len(dataset.pairs),
        "skipped": [{"record": i + 1, "reason": r} for i, r in dataset.skipped],
        "tags": dataset.tag_histogram(),
    }
    logger.info("built %d pairs, tags %s", len(dataset.pairs), summary["tags"])
    _diagnose(json.dumps(summary))


class _SftInput(BaseModel):
    model_config = ConfigDict(extra="ignore")

    layout: dict[str, Any]
    task_relevant_ids: list[str] = Field(default_factory=list)
    task_info: dict[str, Any] | None = None
    instruction: str | None = None
    scene_description: str = ""


def _sft_line(
    lineno: int, line: str, provider: LlmProvider, cfg: CliConfig
) -> tuple[SftRecord | None, str | None]:
    try:
        item = _SftInput.model_validate(json.loads(line))
        layout = parse_layout_dict(item.layout)
        if item.task_info is not None:
            info = task_info_from_dict(item.task_info)
        elif item.instruction is None:
            return None, f"line {lineno}: needs 'task_info' or 'instruction'"
    except (
        json.JSONDecodeError,
        ValidationError,
        FormatError,
        ResponseParseError,
    ) as exc:
        return None, f"line {lineno}: {exc}"
    if item.task_info is None:
        # provider failures propagate and end the command
        info = task_info_from_instruction(item.instruction, provider)
    try:
        record = build_sft_record(
            layout, info, item.task_relevant_ids, item.scene_description, cfg.z_epsilon
        )
    except (LayoutValidationError, UnknownTaskObjectError) as exc:
        return None, f"line {lineno}: {exc}"
    return record, None


def cmd_build_sft(
    input_path: str | Path,
    output_path: str | Path | None,
    cfg: CliConfig,
    provider: LlmProvider | None = None,
) -> None:
    """One ``{"prompt", "completion"}`` line per input scene.

    Input lines hold a layout, task-relevant ids, and either a task info object or an
    instruction to expand through the LLM provider.
    """
    provider = make_llm_provider(cfg) if provider is None else provider
    lines = read_jsonl_lines(input_path)
    results = _ordered_map(lambda n, s: _sft_line(n, s, provider, cfg), lines, cfg.workers)
    errors = [e for _, e in results if e is not None]
    if errors:
        raise InputError(errors)
    write_output(output_path, dump_sft_jsonl(r for r, _ in results))
    logger.info("built %d SFT records", len(results))


def _decode_output(line: str) -> str:
    """Eval lines are layout objects, JSON strings holding completions, or raw text."""
    try:
        data = json.loads(line)
    except json.JSONDecodeError:
        return line
    return data if isinstance(data, str) else line


def _relation_counts(text: str, layout: SceneLayout, cfg: CliConfig) -> tuple[int, int] | None:
    graph_text = extract_graph_text(text)
    if graph_text is not None:
        try:
            edges = parse_graph(graph_text).edges
        except ValueError:
            return None
    elif validate_layout(layout).is_valid:
        edges = build_scene_graph(layout, cfg.z_epsilon).edges
    else:
        return None
    holding = sum(edge_holds(e, layout, cfg.z_epsilon) for e in edges)
    return len(edges), holding


def _eval_row(lineno: int, text: str, cfg: CliConfig) -> dict[str, Any]:
    row: dict[str, Any] = {"line": lineno, "success": True, "error": None}
    try:
        layout = parse_layout(extract_layout_text(text))
    except FormatError as exc:
        row.update(success=False, error=exc.kind.value)
        return row
    report = collision_pairs(layout, cfg.margin)
    row.update(n_objects=len(layout.objects), **report.to_dict())
    counts = _relation_counts(text, layout, cfg)
    if counts is not None:
        row.update(relations_checked=counts[0], relations_holding=counts[1])
    return row


def evaluate_outputs(outputs: list[tuple[int, str]], cfg: CliConfig) -> dict[str, Any]:
    """Per-output and aggregate success, collision and relation-consistency figures.

    Outputs are scored on ``cfg.workers`` threads; rows keep the input order.

    Raises:
        EmptyInputError: ``outputs`` is empty.
    """
    breakdown = success_breakdown([text for _, text in outputs])
    rows = _ordered_map(lambda n, s: _eval_row(n, s, cfg), outputs, cfg.workers)
    rates = [row["rate"] for row in rows if row["success"]]
    aggregate = breakdown.to_dict()
    aggregate.update(
        collision_rate=sum(rates) / len(rates) if rates else 0.0,
        relations_checked=sum(row.get("relations_checked", 0) for row in rows),
        relations_holding=sum(row.get("relations_holding", 0) for row in rows),
    )
    return {"aggregate": aggregate, "outputs": rows}


def format_eval_table(report: dict[str, Any]) -> str:
    lines = [f"{'line':>6} {'ok':>3} {'objects':>7} {'collide':>7} {'rate':>7} {'relations':>11}"]
    for row in report["outputs"]:
        if not row["success"]:
            lines.append(f"{row['line']:>6} {'no':>3}  {row['error']}")
            continue
        relations = (
            f"{row['relations_holding']}/{row['relations_checked']}"
            if "relations_checked" in row
            else "-"
        )
        lines.append(
            f"{row['line']:>6} {'yes':>3} {row['n_objects']:>7} "
            f"{len(row['colliding_pairs']):>7} {row['rate']:>7.3f} {relations:>11}"
        )
    agg = report["aggregate"]
    lines.append(
        f"success rate {agg['success_rate']:.3f} ({agg['n_success']}/{agg['n_total']}), "
        f"collision rate {agg['collision_rate']:.3f}, "
        f"relations {agg['relations_holding']}/{agg['relations_checked']}"
    )
    return "\n".join(lines) + "\n"


def cmd_eval(
    input_path: str | Path,
    output_path: str | Path | None,
    cfg: CliConfig,
    fmt: Literal["json", "table"] = "json",
) -> None:
    outputs = [(lineno, _decode_output(line)) for lineno, line in read_jsonl_lines(input_path)]
    report = evaluate_outputs(outputs, cfg)
    if fmt == "table":
        text = format_eval_table(report)
    else:
        text = json.dumps(report, ensure_ascii=False, indent=2) + "\n"
    write_output(output_path, text)


class _TargetInput(BaseModel):
    model_config = ConfigDict(extra="ignore", allow_inf_nan=False)

    description: str
    size: list[float] = Field(min_length=3, max_length=3)


def cmd_retrieve(
    catalog_path: str | Path,
    targets_path: str | Path,
    output_path: str | Path | None,
    cfg: CliConfig,
    on_table: bool | None = None,
    category: str | None = None,
) -> None:
    """Top-k assets per target with T, S, R and the isometric placement scale."""
    catalog = load_catalog(Path(catalog_path).read_text(encoding="utf-8"))
    assets = {a.asset_id: a for a in catalog}
    targets: list[RetrievalTarget] = []
    errors: list[str] = []
    for lineno, line in read_jsonl_lines(targets_path):
        try:
            item = _TargetInput.model_validate(json.loads(line))
            if any(v <= 0 for v in item.size):
                raise ValueError("target size must be positive")
        except (json.JSONDecodeError, ValidationError, ValueError) as exc:
            errors.append(f"line {lineno}: {exc}")
            continue
        targets.append(RetrievalTarget(item.description, BoxSize(*item.size)))
    if errors:
        raise InputError(errors)

    provider = provider_from_env()

    def ranked(target: RetrievalTarget) -> str:
        results = []
        for scored in retrieve_top_k(
            catalog, target, cfg.top_k, provider, on_table, category, cfg.alpha, cfg.beta
        ):
            s, scaled = isometric_scale(assets[scored.asset_id].dims, target.dims)
            results.append({**scored.to_dict(), "scale": s, "scaled_size": list(scaled)})
        line = {"description": target.description, "size": list(target.dims), "results": results}
        return json.dumps(line, ensure_ascii=False) + "\n"

    out = _ordered_map(ranked, [(t,) for t in targets], cfg.workers)
    write_output(output_path, "".join(out))
