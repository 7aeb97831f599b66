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

"""Negative layouts, preference pairs and the preference objective."""

from ._config import (
    CorruptionConfig,
    CorruptionTag,
    PerturbationKind,
)
from ._geometry import (
    draw_perturbation_kind,
    select_indices,
    perturb_geometry,
)
from ._relations import (
    FLIPPED_RELATION,
    EmptyGraphError,
    flip_edge,
    corrupt_relations,
)
from ._removal import (
    NoTaskObjectsError,
    remove_task_objects,
)
from ._dataset import (
    PAIRS_PER_RECORD,
    DpoRecord,
    DpoPair,
    DpoDataset,
    parse_dpo_record,
    derive_seed,
    build_record_pairs,
    build_dpo_dataset,
    dump_dpo_jsonl,
)
from ._objective import (
    DEFAULT_DPO_BETA,
    dpo_objective,
)

__all__ = [
    "CorruptionConfig",
    "CorruptionTag",
    "PerturbationKind",
    "draw_perturbation_kind",
    "select_indices",
    "perturb_geometry",
    "FLIPPED_RELATION",
    "EmptyGraphError",
    "flip_edge",
    "corrupt_relations",
    "NoTaskObjectsError",
    "remove_task_objects",
    "PAIRS_PER_RECORD",
    "DpoRecord",
    "DpoPair",
    "DpoDataset",
    "parse_dpo_record",
    "derive_seed",
    "build_record_pairs",
    "build_dpo_dataset",
    "dump_dpo_jsonl",
    "DEFAULT_DPO_BETA",
    "dpo_objective",
]
