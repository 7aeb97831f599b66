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

from typing import NamedTuple, Sequence
from ..layout import FormatError, FormatErrorKind, parse_layout
from ._reasoning import extract_layout_text


class EmptyInputError(ValueError):
    """No outputs to evaluate."""


class SuccessReport(NamedTuple):
    n_total: int
    n_success: int
    failures: dict[FormatErrorKind, int]

    @property
    def rate(self) -> float:
        return self.n_success / self.n_total

    def to_dict(self) -> dict:
        return {
            "n_total": self.n_total,
            "n_success": self.n_success,
            "success_rate": self.rate,
            "failures": {kind.value: n for kind, n in self.failures.items()},
        }


def success_breakdown(outputs: Sequence[str]) -> SuccessReport:
    """Count outputs whose layout parses, and failures per format error kind.

    Outputs holding a ``Layout:`` section are judged on that section only.

    Raises:
        EmptyInputError: ``outputs`` is empty.
    """
    if not outputs:
        raise EmptyInputError("no outputs to evaluate")
    failures = {kind: 0 for kind in FormatErrorKind}
    n_success = 0
    for text in outputs:
        try:
            parse_layout(extract_layout_text(text))
        except FormatError as exc:
            failures[exc.kind] += 1
        else:
            n_success += 1
    return SuccessReport(len(outputs), n_success, failures)


def success_rate(outputs: Sequence[str]) -> float:
    """Fraction of outputs that parse into a layout with at least one object.

    Examples:
        >>> success_rate(["not json", "[]"])
        0.0
    """
    return success_breakdown(outputs).rate
