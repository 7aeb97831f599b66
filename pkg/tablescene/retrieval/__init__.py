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

"""Asset catalog, retrieval ranking and isometric placement."""

from ._catalog import (
    CatalogError,
    AssetEntry,
    parse_asset,
    load_catalog,
    asset_to_dict,
    dump_catalog,
)
from ._providers import (
    DEFAULT_SBERT_CHECKPOINT,
    ProviderUnavailable,
    TextSimilarityProvider,
    TokenJaccardProvider,
    HttpSimilarityProvider,
    SentenceTransformerProvider,
    tokenize,
    provider_from_env,
)
from ._score import (
    DEFAULT_ALPHA,
    DEFAULT_BETA,
    EmptyCatalogError,
    RetrievalTarget,
    ScoredAsset,
    size_similarity,
    text_similarity,
    score,
    filter_catalog,
    retrieve_top_k,
    isometric_scale,
)

__all__ = [
    "CatalogError",
    "AssetEntry",
    "parse_asset",
    "load_catalog",
    "asset_to_dict",
    "dump_catalog",
    "DEFAULT_SBERT_CHECKPOINT",
    "ProviderUnavailable",
    "TextSimilarityProvider",
    "TokenJaccardProvider",
    "HttpSimilarityProvider",
    "SentenceTransformerProvider",
    "tokenize",
    "provider_from_env",
    "DEFAULT_ALPHA",
    "DEFAULT_BETA",
    "EmptyCatalogError",
    "RetrievalTarget",
    "ScoredAsset",
    "size_similarity",
    "text_similarity",
    "score",
    "filter_catalog",
    "retrieve_top_k",
    "isometric_scale",
]
