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

"""Asset scoring R = alpha * T + beta * S and isometric placement."""

from typing import Iterable, NamedTuple
import numpy as np
from ..layout import BoxSize
from ._catalog import AssetEntry
from ._providers import TextSimilarityProvider, TokenJaccardProvider

DEFAULT_ALPHA = 0.9
DEFAULT_BETA = 0.1


class EmptyCatalogError(ValueError):
    """No asset is left to rank after filtering."""


class RetrievalTarget(NamedTuple):
    description: str
    dims: BoxSize


class ScoredAsset(NamedTuple):
    asset_id: str
    text_sim: float
    size_sim: float
    score: float

    def to_dict(self) -> dict:
        return {"asset_id": self.asset_id, "T": self.text_sim, "S": self.size_sim, "R": self.score}


def _positive_vector(dims: BoxSize, name: str) -> np.ndarray:
    v = np.asarray(dims, dtype=float)
    if v.shape != (3,) or not np.all(v > 0):
        raise ValueError(f"{name} must be three positive extents, got {tuple(dims)}")
    return v


def size_similarity(dims: BoxSize, target_dims: BoxSize) -> float:
    """Cosine of the two (w, d, h) vectors.

    Examples:
        >>> round(size_similarity(BoxSize(1, 1, 1), BoxSize(1, 1, 2)), 5)
        0.94281
    """
    a = _positive_vector(dims, "dims")
    b = _positive_vector(target_dims, "target_dims")
    return float(np.dot(a, b) / (np.linalg.norm(a) * np.linalg.norm(b)))


def text_similarity(
    text: str,
    target_text: str,
    provider: TextSimilarityProvider | None = None,
) -> float:
    """Provider similarity clamped to [0, 1]; the token-overlap fallback when no provider."""
    provider = TokenJaccardProvider() if provider is None else provider
    return float(np.clip(provider.similarity(text, target_text), 0.0, 1.0))


def score(
    asset: AssetEntry,
    target: RetrievalTarget,
    provider: TextSimilarityProvider | None = None,
    alpha: float = DEFAULT_ALPHA,
    beta: float = DEFAULT_BETA,
) -> ScoredAsset:
    """Score one asset against a target.

    Raises:
        ValueError: ``alpha`` or ``beta`` is negative.
        ProviderUnavailable: The text-similarity provider failed.
    """
    if alpha < 0 or beta < 0:
        raise ValueError(f"alpha and beta must be non-negative, got {alpha}, {beta}")
    t = text_similarity(asset.description, target.description, provider)
    s = size_similarity(asset.dims, target.dims)
    return ScoredAsset(asset.asset_id, t, s, alpha * t + beta * s)


def filter_catalog(
    catalog: Iterable[AssetEntry],
    on_table: bool | None = None,
    category: str | None = None,
) -> list[AssetEntry]:
    return [
        a
        for a in catalog
        if (on_table is None or a.on_table == on_table)
        and (category is None or a.category == category)
    ]


def retrieve_top_k(
    catalog: Iterable[AssetEntry],
    target: RetrievalTarget,
    k: int,
    provider: TextSimilarityProvider | None = None,
    on_table: bool | None = None,
    category: str | None = None,
    alpha: float = DEFAULT_ALPHA,
    beta: float = DEFAULT_BETA,
) -> list[ScoredAsset]:
    """Best ``k`` assets for a target.

    Filters apply before scoring. Results are ordered by descending score with ties
    broken by ascending asset id, so the input order of the catalog does not matter.

    Args:
        catalog: Candidate assets.
        target: Description and box size to match.
        k: Number of results, at least 1.
        provider: Text-similarity binding; token overlap when None.
        on_table: Keep only assets with this OnTable flag.
        category: Keep only assets of this category.
        alpha: Weight of text similarity.
        beta: Weight of size similarity.

    Returns:
        ``min(k, number of filtered assets)`` scored assets.

    Raises:
        ValueError: ``k`` < 1.
        EmptyCatalogError: Nothing is left after filtering.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    candidates = filter_catalog(catalog, on_table, category)
    if not candidates:
        raise EmptyCatalogError("no asset matches the filters")
    scored = [score(a, target, provider, alpha, beta) for a in candidates]
    scored.sort(key=lambda s: (-s.score, s.asset_id))
    return scored[:k]


def isometric_scale(asset_dims: BoxSize, target_dims: BoxSize) -> tuple[float, BoxSize]:
    """Uniform scale matching the asset's shortest axis to the target on that axis.

    Ties for the shortest axis go to w, then d, then h.

    Returns:
        ``(s, s * asset_dims)``; the shortest-axis component equals the target value
        exactly.

    Examples:
        >>> isometric_scale(BoxSize(2, 4, 6), BoxSize(1, 5, 9))
        (0.5, BoxSize(w=1.0, d=2.0, h=3.0))
    """
    a = _positive_vector(asset_dims, "asset_dims")
    t = _positive_vector(target_dims, "target_dims")
    axis = int(np.argmin(a))
    s = float(t[axis] / a[axis])
    scaled = [float(x) * s for x in a]
    scaled[axis] = float(t[axis])
    return s, BoxSize(*scaled)
