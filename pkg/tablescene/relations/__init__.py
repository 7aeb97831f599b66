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

"""Spatial relation rules, coarse quantizers and scene graphs."""

from ._rules import (
    DEFAULT_Z_EPSILON,
    Relation,
    HORIZONTAL_RELATIONS,
    VERTICAL_RELATIONS,
    FacingBin,
    GridCell,
    OutOfRegionError,
    distance_threshold,
    horizontal_relation,
    vertical_relation,
    containment,
    footprint_overlap,
    vertical_overlap,
    face_direction,
    grid_position,
)
from ._spacing import (
    SpacingAxis,
    SpacingGroup,
    equally_spaced_groups,
    is_evenly_spaced,
)
from ._graph import (
    GraphNode,
    RelationEdge,
    SceneGraph,
    NodeChange,
    GraphDiff,
    pair_relations,
    edge_holds,
    build_scene_graph,
    serialize_graph,
    parse_graph,
    graph_diff,
    sorted_edges,
)

__all__ = [
    "DEFAULT_Z_EPSILON",
    "Relation",
    "HORIZONTAL_RELATIONS",
    "VERTICAL_RELATIONS",
    "FacingBin",
    "GridCell",
    "OutOfRegionError",
    "distance_threshold",
    "horizontal_relation",
    "vertical_relation",
    "containment",
    "footprint_overlap",
    "vertical_overlap",
    "face_direction",
    "grid_position",
    "SpacingAxis",
    "SpacingGroup",
    "equally_spaced_groups",
    "is_evenly_spaced",
    "GraphNode",
    "RelationEdge",
    "SceneGraph",
    "NodeChange",
    "GraphDiff",
    "pair_relations",
    "edge_holds",
    "build_scene_graph",
    "serialize_graph",
    "parse_graph",
    "graph_diff",
    "sorted_edges",
]
