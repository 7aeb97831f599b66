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

"""LLM provider bindings and prompt templates."""

import logging
import random
import threading
import time
from enum import Enum
from importlib import resources
from string import Template
from typing import Mapping, NamedTuple, Protocol
import requests
from ..retrieval import ProviderUnavailable

logger = logging.getLogger(__name__)


class PromptName(Enum):
    """Prompt templates shipped in ``tablescene/records/prompts``.

    TASK_INFO:
        Expands a task instruction into task info JSON. Slot: ``task``.
    TASK_FROM_SCENE_GRAPH:
        Proposes a task for a scene. Slots: ``scene_graph``, ``description``.
    REASONING_CONTEXT:
        Asks for the reasoning prose of a record. Slots: ``task_goal_object``,
        ``scene_graph``.
    """

    TASK_INFO = "task_info"
    TASK_FROM_SCENE_GRAPH = "task_from_scene_graph"
    REASONING_CONTEXT = "reasoning_context"


def load_prompt(name: PromptName) -> str:
    return resources.files(__package__).joinpath("prompts", f"{name.value}.txt").read_text(
        encoding="utf-8"
    )


def render_prompt(name: PromptName, **slots: str) -> str:
    """Fill a template's ``${slot}`` placeholders.

    Raises:
        KeyError: A slot is missing.
    """
    return Template(load_prompt(name)).substitute(slots)


class LlmProviderConfig(NamedTuple):
    """Options for :class:`HttpLlmProvider`.

    Args:
        endpoint: URL accepting ``{"model", "prompt"}`` and answering ``{"text"}``.
        model: Model name forwarded to the endpoint.
        timeout: Per-request timeout (s), positive.
        retries: Attempts before giving up.
        backoff: First retry delay (s); doubled on every further attempt.
        max_in_flight: Concurrent requests allowed per provider.
    """

    endpoint: str
    model: str = "default"
    timeout: float = 60.0
    retries: int = 3
    backoff: float = 0.5
    max_in_flight: int = 4

    def check(self) -> None:
        if self.timeout <= 0:
            raise ValueError(f"timeout must be positive, got {self.timeout}")
        if self.retries < 1:
            raise ValueError(f"retries must be >= 1, got {self.retries}")
        if self.max_in_flight < 1:
            raise ValueError(f"max_in_flight must be >= 1, got {self.max_in_flight}")


class LlmProvider(Protocol):
    def complete(self, prompt: str) -> str:
        ...


class StubLlmProvider:
    """Offline provider answering from canned responses.

    A prompt is answered with the response of the first key (in sorted order) that
    occurs in it, or with ``fallback``.

    Raises:
        ProviderUnavailable: No key matches and there is no fallback.
    """

    def __init__(self, responses: Mapping[str, str] | None = None, fallback: str | None = None) -> None:
        self.responses = dict(responses or {})
        self.fallback = fallback
        self.prompts: list[str] = []

    def complete(self, prompt: str) -> str:
        self.prompts.append(prompt)
        for key in sorted(self.responses):
            if key in prompt:
                return self.responses[key]
        if self.fallback is not None:
            return self.fallback
        raise ProviderUnavailable("stub provider has no canned response for this prompt")


class HttpLlmProvider:
    """Text-generation service over JSON POST with retries.

    Failed attempts are retried after ``backoff * 2**attempt`` seconds plus uniform
    jitter of up to ``backoff``. Thread-safe; at most ``max_in_flight`` requests run
    at once.
    """

    def __init__(self, config: LlmProviderConfig) -> None:
        config.check()
        self.config = config
        self._slots = threading.BoundedSemaphore(config.max_in_flight)

    def _post(self, prompt: str) -> str:
        r = requests.post(
            self.config.endpoint,
            json={"model": self.config.model, "prompt": prompt},
            timeout=self.config.timeout,
        )
        r.raise_for_status()
        text = r.json()["text"]
        if not isinstance(text, str):
            raise TypeError("response field 'text' is not a string")
        return text

    def complete(self, prompt: str) -> str:
        last_error: Exception | None = None
        with self._slots:
            for attempt in range(self.config.retries):
                try:
                    return self._post(prompt)
                except (requests.RequestException, KeyError, TypeError, ValueError) as exc:
                    last_error = exc
                    if attempt + 1 < self.config.retries:
                        delay = self.config.backoff * 2**attempt
                        delay += random.uniform(0.0, self.config.backoff)
                        logger.warning(
                            "LLM request failed (attempt %d/%d): %s; retrying in %.2fs",
                            attempt + 1,
                            self.config.retries,
                            exc,
                            delay,
                        )
                        time.sleep(delay)
        logger.error("LLM endpoint %s unavailable: %s", self.config.endpoint, last_error)
        raise ProviderUnavailable(f"LLM endpoint {self.config.endpoint}: {last_error}")
