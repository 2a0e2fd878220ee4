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

import json

import numpy as np
import pytest

chemqfa = pytest.importorskip("chemqfa")


def test_builtin_machines_validate():
    for name, n in [("m1", 0), ("m2", 5), ("m3", 3)]:
        report = chemqfa.validate(chemqfa.build_machine(name, n))
        assert report["ok"]
        assert report["max_violation"] < 1e-9


def test_run_examples():
    m2 = chemqfa.build_machine("m2", 4)
    assert chemqfa.run(m2, "(())").p_accept == pytest.approx(1.0, abs=1e-9)
    r = chemqfa.run(m2, "(()")
    assert r.p_accept == pytest.approx(0.25, abs=1e-9)
    assert r.halted and not r.accepts


def test_trace_sums_to_one():
    r = chemqfa.run(chemqfa.build_machine("m3", 3), "aabbcc", trace=True)
    assert len(r.trace) == r.steps
    for t in r.trace:
        assert t.p_accept + t.p_reject + t.residual == pytest.approx(1.0, abs=1e-12)


def test_qft_against_numpy():
    n = 6
    f = chemqfa.qft_matrix(n)
    k, i = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
    expected = np.exp(2j * np.pi * ((k * i) % n) / n) / np.sqrt(n)
    assert np.allclose(f, expected, atol=1e-14)


def test_machine_text_round_trip():
    m3 = chemqfa.build_machine("m3", 2)
    back = chemqfa.load_machine(m3.to_text())
    assert back.to_text() == m3.to_text()
    assert np.array_equal(back.unitary("$"), m3.unitary("$"))


def test_sweep_report():
    report = json.loads(chemqfa.sweep(chemqfa.build_machine("m1"), "L1_REGEX", 6, threads=2))
    assert report["words_checked"] == 127
    assert report["language"] == "L1_REGEX"


def test_transcribe_and_errors():
    assert chemqfa.transcribe("system: BZ\nBrO3-\nMA\nNaOH\n") == "abc"
    with pytest.raises(chemqfa.UnknownSpecies):
        chemqfa.transcribe("system: BZ\nKMnO4\n")
    with pytest.raises(chemqfa.SymbolError):
        chemqfa.run(chemqfa.build_machine("m1"), "abz")
    with pytest.raises(chemqfa.InvalidParameter):
        chemqfa.build_machine("m2", 1)
    assert chemqfa.membership("L2_DYCK", "(())")
