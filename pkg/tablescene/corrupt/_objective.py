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

import math
from scipy.special import log_expit

DEFAULT_DPO_BETA = 0.1


def dpo_objective(
    logp_chosen_policy: float,
    logp_rejected_policy: float,
    logp_chosen_ref: float,
    logp_rejected_ref: float,
    beta: float = DEFAULT_DPO_BETA,
) -> float:
    """Per-pair preference log-likelihood.

    Evaluates ``log sigmoid(beta * (chosen log-ratio - rejected log-ratio))`` where a
    log-ratio is the policy log-probability minus the reference log-probability. The
    training loss is its negative mean over pairs.

    Args:
        logp_chosen_policy: Policy log-probability of the preferred completion.
        logp_rejected_policy: Policy log-probability of the dispreferred completion.
        logp_chosen_ref: Reference log-probability of the preferred completion.
        logp_rejected_ref: Reference log-probability of the dispreferred completion.
        beta: Temperature, must be positive.

    Returns:
        A value in (-inf, 0).

    Raises:
        ValueError: ``beta`` is not positive or an input is not finite.

    Examples:
        >>> round(dpo_objective(0.0, 0.0, 0.0, 0.0), 6)
        -0.693147
        >>> round(dpo_objective(1.0, 0.0, 0.0, 0.0, beta=1.0), 6)
        -0.313262
    """
    values = (logp_chosen_policy, logp_rejected_policy, logp_chosen_ref, logp_rejected_ref)
    if not all(math.isfinite(v) for v in values):
        raise ValueError(f"log-probabilities must be finite, got {values}")
    if not (math.isfinite(beta) and beta > 0):
        raise ValueError(f"beta must be positive, got {beta}")
    margin = (logp_chosen_policy - logp_chosen_ref) - (logp_rejected_policy - logp_rejected_ref)
    return float(log_expit(beta * margin))
