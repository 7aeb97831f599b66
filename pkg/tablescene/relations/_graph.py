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

"""Scene graph extraction, text form and diffs.

Text form, one fact per line, nodes first, then edges, then spacing groups::

    (Lamp, is at, center)
    (Lamp, face to, front)
    (Cup, left of, Bowl)
    (Cup, Plate, Bowl, are equally spaced along, x)
"""

from itertools import permutations
from typing import NamedTuple
from ..layout import SceneLayout, check_layout
from ._rules import (
    DEFAULT_Z_EPSILON,
    FacingBin,
    GridCell,
    HORIZONTAL_RELATIONS,
    Relation,
    containment,
    face_direction,
    grid_position,
    horizontal_relation,
    vertical_relation,
)
from ._spacing import SpacingAxis, SpacingGroup, equally_spaced_groups

IS_AT = "is at"
FACE_TO = "face to"
EQUALLY_SPACED = "are equally spaced along"


class GraphNode(NamedTuple):
    object_id: str
    grid_cell: GridCell
    facing: FacingBin


class RelationEdge(NamedTuple):
    subject_id: str
    relation: Relation
    object_id: str

    def sort_key(self) -> tuple[str, str, str]:
        return (self.subject_id, self.relation.value, self.object_id)

    def __str__(self) -> str:
        return f"({self.subject_id}, {self.relation.value}, {self.object_id})"


class SceneGraph(NamedTuple):
    nodes: tuple[GraphNode, ...] = ()
    edges: tuple[RelationEdge, ...] = ()
    spacing_groups: tuple[SpacingGroup, ...] = ()


class NodeChange(NamedTuple):
    object_id: str
    before: GraphNode | None
    after: GraphNode | None


class GraphDiff(NamedTuple):
    added: tuple[RelationEdge, ...]
    removed: tuple[RelationEdge, ...]
    changed_nodes: tuple[NodeChange, ...]

    @property
    def is_empty(self) -> bool:
        return not (self.added or self.removed or self.changed_nodes)


def sorted_edges(edges) -> tuple[RelationEdge, ...]:
    """Deduplicated edges in (subject, relation, object) order."""
    return tuple(sorted(set(edges), key=RelationEdge.sort_key))


def pair_relations(
    layout: SceneLayout,
    subject_id: str,
    object_id: str,
    z_epsilon: float = DEFAULT_Z_EPSILON,
) -> list[Relation]:
    """Every relation whose rule holds for the ordered pair."""
    subject = layout.get(subject_id)
    obj = layout.get(object_id)
    relations: list[Relation] = []
    horizontal = horizontal_relation(subject, obj, layout.placement_region)
    if horizontal is not None:
        relations.append(horizontal)
    vertical = vertical_relation(subject, obj, z_epsilon)
    if vertical is not None:
        relations.append(vertical)
    if containment(subject, obj):
        relations.append(Relation.IN)
    return relations


def edge_holds(
    edge: RelationEdge,
    layout: SceneLayout,
    z_epsilon: float = DEFAULT_Z_EPSILON,
) -> bool:
    """Re-evaluate the rule behind one edge; False if either object is missing."""
    ids = set(layout.object_ids())
    if edge.subject_id not in ids or edge.object_id not in ids:
        return False
    if edge.subject_id == edge.object_id:
        return False
    subject = layout.get(edge.subject_id)
    obj = layout.get(edge.object_id)
    if edge.relation in HORIZONTAL_RELATIONS:
        return horizontal_relation(subject, obj, layout.placement_region) == edge.relation
    if edge.relation == Relation.IN:
        return containment(subject, obj)
    return vertical_relation(subject, obj, z_epsilon) == edge.relation


def build_scene_graph(
    layout: SceneLayout,
    z_epsilon: float = DEFAULT_Z_EPSILON,
) -> SceneGraph:
    """Extract the scene graph of a layout.

    Every ordered pair contributes each relation whose rule holds, so symmetric
    facts appear in both directions, e.g. (A, left of, B) and (B, right of, A).
    "in" and "above" may both be present for the same pair.

    Args:
        layout: A valid layout.
        z_epsilon: Slack of the above/below rule (cm).

    Raises:
        LayoutValidationError: The layout fails :func:`validate_layout`.
    """
    check_layout(layout)
    region = layout.placement_region
    nodes = tuple(
        GraphNode(o.id, grid_position(o, region), face_direction(o.rotation))
        for o in sorted(layout.objects, key=lambda o: o.id)
    )
    edges: list[RelationEdge] = []
    for s, o in permutations(layout.object_ids(), 2):
        for relation in pair_relations(layout, s, o, z_epsilon):
            edges.append(RelationEdge(s, relation, o))
    groups = tuple(equally_spaced_groups(layout.objects, region))
    return SceneGraph(nodes=nodes, edges=sorted_edges(edges), spacing_groups=groups)


def serialize_graph(graph: SceneGraph) -> str:
    """One parenthesized triple per line; empty graph gives an empty string."""
    lines: list[str] = []
    for node in graph.nodes:
        lines.append(f"({node.object_id}, {IS_AT}, {node.grid_cell.value})")
        lines.append(f"({node.object_id}, {FACE_TO}, {node.facing.value})")
    for edge in graph.edges:
        lines.append(str(edge))
    for group in graph.spacing_groups:
        members = ", ".join(group.member_ids)
        lines.append(f"({members}, {EQUALLY_SPACED}, {group.axis.value})")
    return "\n".join(lines)


def parse_graph(text: str) -> SceneGraph:
    """Inverse of :func:`serialize_graph`.

    Spacing-group mean gaps are not part of the text and come back as 0.0.

    Raises:
        ValueError: A line is not a known fact.
    """
    cells: dict[str, GridCell] = {}
    facings: dict[str, FacingBin] = {}
    edges: list[RelationEdge] = []
    groups: list[SpacingGroup] = []
    relation_names = {r.value: r for r in Relation}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if not (line.startswith("(") and line.endswith(")")):
            raise ValueError(f"line {lineno}: not a triple: {line!r}")
        parts = [p.strip() for p in line[1:-1].split(", ")]
        if len(parts) >= 5 and parts[-2] == EQUALLY_SPACED:
            groups.append(SpacingGroup(tuple(parts[:-2]), SpacingAxis(parts[-1]), 0.0))
            continue
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 3 fields: {line!r}")
        subject, predicate, target = parts
        if predicate == IS_AT:
            cells[subject] = GridCell(target)
        elif predicate == FACE_TO:
            facings[subject] = FacingBin(target)
        elif predicate in relation_names:
            edges.append(RelationEdge(subject, relation_names[predicate], target))
        else:
            raise ValueError(f"line {lineno}: unknown relation {predicate!r}")
    nodes = tuple(
        GraphNode(object_id, cells[object_id], facings[object_id])
        for object_id in sorted(cells)
        if object_id in facings
    )
    return SceneGraph(nodes=nodes, edges=sorted_edges(edges), spacing_groups=tuple(groups))


def graph_diff(a: SceneGraph, b: SceneGraph) -> GraphDiff:
    """Set difference from ``a`` to ``b``.

    Returns:
        Edges only in ``b`` (added), edges only in ``a`` (removed) and nodes whose
        cell or facing differ, including nodes present on one side only.
    """
    edges_a = set(a.edges)
    edges_b = set(b.edges)
    nodes_a = {n.object_id: n for n in a.nodes}
    nodes_b = {n.object_id: n for n in b.nodes}
    changed = tuple(
        NodeChange(object_id, nodes_a.get(object_id), nodes_b.get(object_id))
        for object_id in sorted(set(nodes_a) | set(nodes_b))
        if nodes_a.get(object_id) != nodes_b.get(object_id)
    )
    return GraphDiff(
        added=sorted_edges(edges_b - edges_a),
        removed=sorted_edges(edges_a - edges_b),
        changed_nodes=changed,
    )
