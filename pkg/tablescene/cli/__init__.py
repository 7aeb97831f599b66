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

"""``tablescene`` command-line entry point.

Exit codes: 0 success, 2 input error, 3 provider error.
"""

import argparse
import logging
import sys
from typing import Sequence
from ..records import ResponseParseError
from ..retrieval import ProviderUnavailable
from ._config import CliConfig, load_cli_config
from ._io import atomic_write_text, read_jsonl_lines, write_output
from ._commands import (
    InputError,
    cmd_extract_graph,
    cmd_build_dpo,
    cmd_build_sft,
    cmd_eval,
    cmd_retrieve,
    evaluate_outputs,
    format_eval_table,
    make_llm_provider,
)

__all__ = [
    "EXIT_OK",
    "EXIT_INPUT_ERROR",
    "EXIT_PROVIDER_ERROR",
    "CliConfig",
    "load_cli_config",
    "atomic_write_text",
    "read_jsonl_lines",
    "write_output",
    "InputError",
    "cmd_extract_graph",
    "cmd_build_dpo",
    "cmd_build_sft",
    "cmd_eval",
    "cmd_retrieve",
    "evaluate_outputs",
    "format_eval_table",
    "make_llm_provider",
    "build_arg_parser",
    "main",
]

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_PROVIDER_ERROR = 3



def _on_table(value: str) -> bool:
    lowered = value.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {value!r}")


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tablescene",
        description="Tabletop layout scene graphs, preference data and evaluation.",
    )
    # None means "not given" so lower configuration layers apply.
    parser.add_argument("--config", default=None, help="JSON configuration file")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--alpha", type=float, default=None, help="text similarity weight")
    parser.add_argument("--beta", type=float, default=None, help="size similarity weight")
    parser.add_argument("--top-k", dest="top_k", type=int, default=None)
    parser.add_argument("--z-epsilon", dest="z_epsilon", type=float, default=None)
    parser.add_argument("--margin", type=float, default=None, help="collision margin (cm)")
    parser.add_argument("--provider", choices=["stub", "http"], default=None)
    parser.add_argument("--endpoint", default=None)
    parser.add_argument("--model", default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument(
        "--log-level",
        dest="log_level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract-graph", help="scene graph of every layout")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("build-dpo", help="preference pairs from positive records")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("build-sft", help="reasoning training records")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("eval", help="success, collision and relation figures")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--format", dest="fmt", choices=["json", "table"], default="json")

    p = sub.add_parser("retrieve", help="rank catalog assets for targets")
    p.add_argument("catalog")
    p.add_argument("targets")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--on-table", dest="on_table", type=_on_table, default=None)
    p.add_argument("--category", default=None)
    return parser


_CONFIG_FLAGS = (
    "seed",
    "alpha",
    "beta",
    "top_k",
    "z_epsilon",
    "margin",
    "provider",
    "endpoint",
    "model",
    "workers",
    "log_level",
)


def _run(args: argparse.Namespace, cfg: CliConfig) -> None:
    if args.command == "extract-graph":
        cmd_extract_graph(args.input, args.output, cfg)
    elif args.command == "build-dpo":
        cmd_build_dpo(args.input, args.output, cfg)
    elif args.command == "build-sft":
        cmd_build_sft(args.input, args.output, cfg)
    elif args.command == "eval":
        cmd_eval(args.input, args.output, cfg, args.fmt)
    else:
        cmd_retrieve(
            args.catalog, args.targets, args.output, cfg, args.on_table, args.category
        )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        cfg = load_cli_config(args.config, {k: getattr(args, k) for k in _CONFIG_FLAGS})
    except (OSError, ValueError) as exc:
        print(f"tablescene: configuration error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    logging.basicConfig(
        stream=sys.stderr,
        level=cfg.log_level,
        format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
    )
    try:
        _run(args, cfg)
    except (ProviderUnavailable, ResponseParseError) as exc:
        print(f"tablescene: provider error: {exc}", file=sys.stderr)
        return EXIT_PROVIDER_ERROR
    except InputError as exc:
        for message in exc.messages:
            print(f"tablescene: {message}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (OSError, ValueError) as exc:
        # FormatError, validation, catalog and empty-input errors all derive from ValueError
        print(f"tablescene: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return EXIT_OK
