# Copyright 2026 The chemqfa Authors
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

"""Two-way quantum finite automata for chemical reaction languages."""

from chemqfa._core import (
    CompletionError,
    Error,
    InvalidParameter,
    Machine,
    ParseError,
    RunResult,
    SpecError,
    SymbolError,
    UnknownSpecies,
    build_machine,
    load_machine,
    membership,
    qft_matrix,
    run,
    sweep,
    transcribe,
    validate,
)

__all__ = [
    "CompletionError",
    "Error",
    "InvalidParameter",
    "Machine",
    "ParseError",
    "RunResult",
    "SpecError",
    "SymbolError",
    "UnknownSpecies",
    "build_machine",
    "load_machine",
    "membership",
    "qft_matrix",
    "run",
    "sweep",
    "transcribe",
    "validate",
]
