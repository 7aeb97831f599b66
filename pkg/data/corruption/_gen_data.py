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


# %%
import sys
import json
import numpy as np
from tablescene.collision import collision_pairs
from tablescene.corrupt import CorruptionConfig, perturb_geometry
from tablescene.layout import random_layout

# N_LAYOUTS = 100
# N_LAYOUTS = 1000
N_LAYOUTS = int(sys.argv[1])
N_SEEDS = 10
N_OBJECTS = 15
MAX_POS_FRACS = [0.05, 0.10, 0.15, 0.20, 0.30]

# Collision-free corpus.
rng = np.random.default_rng(2026)
layouts = [random_layout(rng, N_OBJECTS) for _ in range(N_LAYOUTS)]
base_rate = float(np.mean([collision_pairs(x).rate for x in layouts]))

ls = []
for frac in MAX_POS_FRACS:
    cfg = CorruptionConfig(max_pos_frac=frac)
    rates = [
        collision_pairs(perturb_geometry(x, seed, cfg)).rate
        for x in layouts
        for seed in range(N_SEEDS)
    ]
    ls.append([frac, float(np.mean(rates)), float(np.std(rates))])
    print(f"max_pos_frac={frac:.2f}: mean collision rate {np.mean(rates):.4f}")

with open(f"collision_{N_LAYOUTS:04d}.json", "w") as f:
    json.dump({"base_rate": base_rate, "rates": ls}, f)
