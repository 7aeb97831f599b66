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

from typing import Sequence
import numpy as np
from ..layout import SceneLayout
from ._config import CorruptionConfig


class NoTaskObjectsError(ValueError):
    """No task-relevant object ids were given."""


def remove_task_objects(
    layout: SceneLayout,
    task_relevant_ids: Sequence[str],
    seed: int,
    cfg: CorruptionConfig = CorruptionConfig(),
) -> SceneLayout:
    """Delete one or more task-relevant objects.

    The count k is drawn uniformly from ``cfg.removal_count_range`` and capped at the
    number of distinct task ids; the k ids are drawn without replacement.

    Args:
        layout: Source layout.
        task_relevant_ids: Ids of the task objects; all must be in the layout.
        seed: RNG seed.
        cfg: Corruption options.

    Returns:
        The layout without the removed objects; everything else is untouched.

    Raises:
        NoTaskObjectsError: ``task_relevant_ids`` is empty.
        KeyError: An id is not in the layout.
    """
    if not task_relevant_ids:
        raise NoTaskObjectsError("no task-relevant objects to remove")
    cfg.check()
    candidates = sorted(set(task_relevant_ids))
    present = set(layout.object_ids())
    for object_id in candidates:
        if object_id not in present:
            raise KeyError(object_id)
    rng = np.random.default_rng(seed)
    k = int(rng.choice(np.asarray(cfg.removal_count_range)))
    k = min(k, len(candidates))
    removed = {candidates[int(i)] for i in rng.choice(len(candidates), size=k, replace=False)}
    return layout._replace(objects=tuple(o for o in layout.objects if o.id not in removed))
