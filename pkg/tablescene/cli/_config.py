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

"""Command-line configuration.

Values are merged with increasing precedence from built-in defaults, the JSON file
given by ``--config``, ``TABLESCENE_*`` environment variables and command-line flags.
"""

import json
import os
from pathlib import Path
from typing import Any, Literal, Mapping
from pydantic import BaseModel, ConfigDict, Field
from ..relations import DEFAULT_Z_EPSILON
from ..retrieval import DEFAULT_ALPHA, DEFAULT_BETA

ENV_PREFIX = "TABLESCENE_"

# Settings that may come from the environment.
ENV_KEYS = (
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


class CliConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: int = Field(0, ge=0, lt=2**64)
    alpha: float = Field(DEFAULT_ALPHA, ge=0)
    beta: float = Field(DEFAULT_BETA, ge=0)
    top_k: int = Field(5, ge=1)
    z_epsilon: float = Field(DEFAULT_Z_EPSILON, ge=0)
    margin: float = 0.0
    provider: Literal["stub", "http"] = "stub"
    endpoint: str | None = None
    model: str = "default"
    timeout: float = Field(60.0, gt=0)
    workers: int = Field(1, ge=1)
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"
    stub_responses: dict[str, str] = Field(default_factory=dict)


def env_overrides(env: Mapping[str, str]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key in ENV_KEYS:
        value = env.get(ENV_PREFIX + key.upper())
        if value is not None and value != "":
            out[key] = value.upper() if key == "log_level" else value
    return out


def load_cli_config(
    config_path: str | Path | None = None,
    flags: Mapping[str, Any] | None = None,
    env: Mapping[str, str] | None = None,
) -> CliConfig:
    """Merge the configuration layers.

    Args:
        config_path: Optional JSON file with CliConfig fields.
        flags: Flag values; None entries are treated as not given.
        env: Environment mapping; ``os.environ`` when None.

    Raises:
        OSError: The config file cannot be read.
        ValueError: The config file is not JSON or a value is invalid.
    """
    env = os.environ if env is None else env
    merged: dict[str, Any] = {}
    if config_path is not None:
        data = json.loads(Path(config_path).read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            raise ValueError(f"{config_path}: config file must hold a JSON object")
        merged.update(data)
    merged.update(env_overrides(env))
    merged.update({k: v for k, v in (flags or {}).items() if v is not None})
    return CliConfig.model_validate(merged)
