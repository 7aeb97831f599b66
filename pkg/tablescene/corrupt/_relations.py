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

import logging
import numpy as np
from ..relations import Relation, RelationEdge, SceneGraph, graph_diff, sorted_edges
from ._config import CorruptionConfig
from ._geometry import select_indices

logger = logging.getLogger(__name__)

FLIPPED_RELATION = {
    Relation.LEFT_OF: Relation.RIGHT_OF,
    Relation.RIGHT_OF: Relation.LEFT_OF,
    Relation.IN_FRONT_OF: Relation.BEHIND,
    Relation.BEHIND: Relation.IN_FRONT_OF,
    Relation.ABOVE: Relation.BELOW,
    Relation.BELOW: Relation.ABOVE,
    Relation.IN: Relation.LEFT_OF,
}

_MAX_ATTEMPTS = 64


class EmptyGraphError(ValueError):
    """The scene graph has no edges to corrupt."""


def flip_edge(edge: RelationEdge) -> RelationEdge:
    return edge._replace(relation=FLIPPED_RELATION[edge.relation])


def _corrupt_once(
    edges: tuple[RelationEdge, ...],
    rng: np.random.Generator,
    cfg: CorruptionConfig,
) -> tuple[RelationEdge, ...]:
    selected = set(int(i) for i in select_indices(rng, len(edges), cfg.select_prob))
    out: list[RelationEdge] = []
    for i, edge in enumerate(edges):
        if i not in selected:
            out.append(edge)
        elif rng.random() < cfg.relation_flip_vs_remove:
            out.append(flip_edge(edge))
    return sorted_edges(out)


def corrupt_relations(
    graph: SceneGraph,
    seed: int,
    cfg: CorruptionConfig = CorruptionConfig(),
) -> SceneGraph:
    """Remove or flip a random subset of relation edges.

    Every edge is selected with ``cfg.select_prob`` (at least one always is). A
    selected edge is flipped with probability ``cfg.relation_flip_vs_remove`` and
    removed otherwise. Flips swap left/right, front/behind and above/below; "in" becomes
    "left of". Nodes and spacing groups are kept.

    Raises:
        EmptyGraphError: The graph has no edges.
    """
    if not graph.edges:
        raise EmptyGraphError("scene graph has no relation edges")
    cfg.check()
    rng = np.random.default_rng(seed)
    edges = sorted_edges(graph.edges)
    for _ in range(_MAX_ATTEMPTS):
        corrupted = graph._replace(edges=_corrupt_once(edges, rng, cfg))
        if not graph_diff(graph, corrupted).is_empty:
            return corrupted
        logger.debug("relation corruption left the graph unchanged, redrawing")
    # flips that cancel each other out on every attempt; dropping one edge always differs
    return graph._replace(edges=edges[1:])
