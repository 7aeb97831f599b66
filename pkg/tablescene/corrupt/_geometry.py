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

"""Geometric perturbations that push a layout into collisions."""

import logging
import numpy as np
from ..layout import BoxSize, ObjectInstance, Position, RegionRect, SceneLayout, normalize_angle
from ._config import CorruptionConfig, PerturbationKind

logger = logging.getLogger(__name__)

_KINDS = (PerturbationKind.POSITION, PerturbationKind.ROTATION, PerturbationKind.SIZE)


def draw_perturbation_kind(rng: np.random.Generator, cfg: CorruptionConfig) -> PerturbationKind:
    """Draw one perturbation kind with probabilities (pos_prob, rot_prob, size_prob)."""
    index = rng.choice(len(_KINDS), p=cfg.kind_probabilities())
    return _KINDS[int(index)]


def select_indices(rng: np.random.Generator, n: int, prob: float) -> np.ndarray:
    """Bernoulli selection over ``n`` items, redrawn until at least one is selected."""
    if n < 1:
        raise ValueError("nothing to select from")
    while True:
        mask = rng.random(n) < prob
        if mask.any():
            return np.flatnonzero(mask)
        logger.debug("empty selection, redrawing")


def _move(
    obj: ObjectInstance,
    rng: np.random.Generator,
    region: RegionRect,
    cfg: CorruptionConfig,
) -> ObjectInstance:
    dx, dy = rng.uniform(-1.0, 1.0, size=2) * cfg.max_pos_frac * np.array(
        [region.width, region.depth]
    )
    x = float(np.clip(obj.position.x + dx, region.x_min, region.x_max))
    y = float(np.clip(obj.position.y + dy, region.y_min, region.y_max))
    return obj._replace(position=Position(x, y, obj.position.z))


def _turn(obj: ObjectInstance, rng: np.random.Generator, cfg: CorruptionConfig) -> ObjectInstance:
    delta = rng.uniform(-cfg.rot_delta_max, cfg.rot_delta_max)
    return obj._replace(rotation=normalize_angle(obj.rotation + float(delta)))


def _rescale(obj: ObjectInstance, rng: np.random.Generator, cfg: CorruptionConfig) -> ObjectInstance:
    scale = float(rng.uniform(*cfg.size_scale_range))
    w, d, h = obj.size
    return obj._replace(size=BoxSize(w * scale, d * scale, h * scale))


def perturb_geometry(
    layout: SceneLayout,
    seed: int,
    cfg: CorruptionConfig = CorruptionConfig(),
) -> SceneLayout:
    """Perturb a random subset of objects.

    Each object is selected with ``cfg.select_prob`` (redrawn until at least one is
    selected). A selected object gets exactly one of: a uniform shift of up to
    ``max_pos_frac`` of the region width and depth, clamped so its center stays in the
    region; a uniform rotation change of up to ``rot_delta_max``; or a uniform scale in
    ``size_scale_range`` applied to all three extents.

    Args:
        layout: Layout to perturb.
        seed: RNG seed; equal inputs and seeds give equal outputs.
        cfg: Corruption options.

    Returns:
        The perturbed layout, objects in the input order.
    """
    cfg.check()
    rng = np.random.default_rng(seed)
    region = layout.placement_region
    objects = list(layout.objects)
    for i in select_indices(rng, len(objects), cfg.select_prob):
        kind = draw_perturbation_kind(rng, cfg)
        if kind is PerturbationKind.POSITION:
            objects[i] = _move(objects[i], rng, region, cfg)
        elif kind is PerturbationKind.ROTATION:
            objects[i] = _turn(objects[i], rng, cfg)
        else:
            objects[i] = _rescale(objects[i], rng, cfg)
    return layout._replace(objects=tuple(objects))
