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


import sys
import json
import numpy as np
import matplotlib
import matplotlib.pyplot as plt

matplotlib.rcParams["font.size"] = 12

N_LAYOUTS = int(sys.argv[1])

with open(f"collision_{N_LAYOUTS:04d}.json") as f:
    data = json.load(f)
rates = np.array(data["rates"])
frac = rates[:, 0]
mean = rates[:, 1]
std = rates[:, 2]

fig, ax = plt.subplots(figsize=(6, 4), dpi=300)
ax.errorbar(frac, mean, yerr=std, fmt="ko-", capsize=3, label="perturbed")
ax.axhline(data["base_rate"], color="r", linestyle="--", label="original")
ax.set_xlabel("max position shift (fraction of region)")
ax.set_ylabel("collision rate")
ax.set_ylim(bottom=0)
ax.grid()
ax.legend()
plt.tight_layout()
# plt.show()

plt.savefig(f"_fig_collision_{N_LAYOUTS:04d}.pdf", dpi=300, bbox_inches="tight")
