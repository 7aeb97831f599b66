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

"""Text-similarity provider bindings.

``TABLESCENE_SIMILARITY_PROVIDER`` selects the binding used by :func:`provider_from_env`:

- ``jaccard`` (default): token-set overlap, offline and deterministic;
- ``http``: a similarity service at ``TABLESCENE_SIMILARITY_ENDPOINT``;
- ``sbert``: an in-process sentence-transformers model.
"""

import logging
import os
import re
from typing import Mapping, Protocol
import numpy as np
import requests

logger = logging.getLogger(__name__)

DEFAULT_SBERT_CHECKPOINT = "all-mpnet-base-v2"

_TOKEN = re.compile(r"\w+")


class ProviderUnavailable(RuntimeError):
    """An external provider could not be reached or returned an unusable reply."""


class TextSimilarityProvider(Protocol):
    def similarity(self, text_a: str, text_b: str) -> float:
        ...


def tokenize(text: str) -> frozenset[str]:
    return frozenset(_TOKEN.findall(text.lower()))


class TokenJaccardProvider:
    """Jaccard index of lowercase word-token sets.

    Examples:
        >>> TokenJaccardProvider().similarity("coffee mug", "red coffee mug")
        0.6666666666666666
    """

    def similarity(self, text_a: str, text_b: str) -> float:
        if text_a == text_b:
            return 1.0
        tokens_a = tokenize(text_a)
        tokens_b = tokenize(text_b)
        union = tokens_a | tokens_b
        if not union:
            return 0.0
        return len(tokens_a & tokens_b) / len(union)


class HttpSimilarityProvider:
    """Similarity service speaking ``{text_a, text_b} -> {similarity}`` over JSON POST.

    Safe for concurrent use; every call is an independent request.
    """

    def __init__(self, endpoint: str, timeout: float = 10.0) -> None:
        if timeout <= 0:
            raise ValueError("timeout must be positive")
        self.endpoint = endpoint
        self.timeout = timeout

    def similarity(self, text_a: str, text_b: str) -> float:
        try:
            r = requests.post(
                self.endpoint,
                json={"text_a": text_a, "text_b": text_b},
                timeout=self.timeout,
            )
            r.raise_for_status()
            return float(r.json()["similarity"])
        except (requests.RequestException, KeyError, TypeError, ValueError) as exc:
            logger.error("similarity service %s failed: %s", self.endpoint, exc)
            raise ProviderUnavailable(f"similarity service {self.endpoint}: {exc}") from exc


class SentenceTransformerProvider:
    """Cosine similarity of sentence embeddings.

    The model is loaded on first use. Not safe for concurrent use from several threads;
    callers serialize access.
    """

    def __init__(self, checkpoint: str = DEFAULT_SBERT_CHECKPOINT, device: str | None = None) -> None:
        self.checkpoint = checkpoint
        self.device = device
        self._model = None
        self._cache: dict[str, np.ndarray] = {}

    def _embed(self, text: str) -> np.ndarray:
        if self._model is None:
            try:
                from sentence_transformers import SentenceTransformer
            except ImportError as exc:
                raise ProviderUnavailable(
                    "sentence-transformers is not installed; install the 'embed' extra"
                ) from exc
            self._model = SentenceTransformer(self.checkpoint, device=self.device)
        if text not in self._cache:
            self._cache[text] = self._model.encode(
                [text], convert_to_numpy=True, normalize_embeddings=True, show_progress_bar=False
            )[0]
        return self._cache[text]

    def similarity(self, text_a: str, text_b: str) -> float:
        va = self._embed(text_a)
        vb = self._embed(text_b)
        denom = np.linalg.norm(va) * np.linalg.norm(vb)
        if denom == 0:
            return 0.0
        return float(np.dot(va, vb) / denom)


def provider_from_env(env: Mapping[str, str] | None = None) -> TextSimilarityProvider:
    """Select the similarity binding from environment variables.

    Raises:
        ValueError: Unknown binding name, or ``http`` without an endpoint.
    """
    env = os.environ if env is None else env
    name = env.get("TABLESCENE_SIMILARITY_PROVIDER", "jaccard").strip().lower()
    if name == "jaccard":
        return TokenJaccardProvider()
    if name == "http":
        endpoint = env.get("TABLESCENE_SIMILARITY_ENDPOINT")
        if not endpoint:
            raise ValueError("TABLESCENE_SIMILARITY_ENDPOINT is required for the http provider")
        return HttpSimilarityProvider(endpoint)
    if name == "sbert":
        return SentenceTransformerProvider()
    raise ValueError(f"unknown similarity provider {name!r}")
