# Copyright 2026 The Privsum Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json

import pytest

import privsum


def test_audit_clean_instance():
    report = privsum.audit(3, 2, 1, 1)
    assert report["config"]["L"] == 3
    assert report["config"]["rates"]["R_K_sum"] == "3/2"
    assert report["profile"]["C"] == [2.0, 1.0, 0.0, 0.0]
    assert report["profile"]["symmetric"] is True
    assert report["privacy"]["pass"] is True
    assert report["ramp"]["pass"] is True


def test_audit_json_round_trips():
    raw = privsum.audit_json(2, 1, 0, 0)
    report = json.loads(raw)
    assert report["correctness"]["pass"] is True


def test_run_protocol_worked_example():
    t = privsum.run_protocol(3, 2, 1, ["10", "01", "11"], "10")
    assert t["K"] == ["1", "0", "1"]
    assert t["X"] == ["11", "01", "10"]
    assert t["sigma_hat"] == "00"


def test_run_protocol_rejects_bad_input():
    with pytest.raises(Exception):
        privsum.run_protocol(3, 2, 1, ["10", "01"], "10")


def test_sweep_csv():
    csv = privsum.sweep_csv([2], [1, 2])
    lines = csv.strip().split("\n")
    assert lines[0].startswith("L,n,n1,T,alpha_num,alpha_den")
    assert len(lines) == 1 + 5
    assert privsum.sweep_csv([2], [1, 2]) == csv


def test_fixture_names():
    assert privsum.fixture_names() == ["plaintext", "key_reuse",
                                       "truncated_key"]
