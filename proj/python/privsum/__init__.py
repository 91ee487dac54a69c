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

"""Exact information-leakage auditing for XOR-sum aggregation protocols."""

import json as _json

from ._core import audit_json, fixture_names, run_protocol, sweep_csv

__all__ = ["audit", "audit_json", "fixture_names", "run_protocol",
           "sweep_csv"]


def audit(L, n, n1, T, custom_path="", max_seed_bits=24, threads=0):
    """Audit one instance and return the report as a dict."""
    return _json.loads(
        audit_json(L, n, n1, T, custom_path, max_seed_bits, threads))
