# Copyright 2026 The iml Authors.
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

from fractions import Fraction

import pytest

import iml


def test_solve_small_instances():
    r = iml.solve_f(4, 4)
    assert r.f == 5
    assert len(r.witness) == 4
    ok, clause, _ = iml.verify_witness(4, 4, r.f, r.witness)
    assert ok and clause == "none"
    assert iml.brute_force_f(4, 4) == 5
    assert not iml.hall_check(4, 4, r.f - 1)
    assert r.neighborhood_size < len(r.violator)
    assert [iml.solve_f(2, m).f for m in range(20)] == [2] * 20


def test_capped_and_errors():
    capped = iml.solve_f_capped(3, 4, 3)
    assert isinstance(capped, iml.CapExceeded)
    assert capped.matching_size == 2
    assert iml.solve_f_capped(3, 4, 4).f == 4
    with pytest.raises(ValueError):
        iml.solve_f(0, 1)
    with pytest.raises(ValueError):
        iml.theorem_parameters(2)


def test_arithmetic_helpers():
    assert iml.multiples_in_interval(3, 4, 4) == [6]
    assert iml.lcm_upto(10) == 2520
    assert iml.lcm_upto(50) > 2**64
    assert iml.canonical_m(3, 10) == 4
    ok, clause, _ = iml.verify_witness(3, 3, 3, [5, 6, 6])
    assert not ok and clause == "injectivity"


def test_matching_state():
    s = iml.MatchingState(3, 4)
    for _ in range(3):
        s.extend_one()
    assert s.matching_size == 2
    assert s.hall_certificate() == ([2, 3], 1)
    s.extend_one()
    assert s.perfect


def test_inequality_checks():
    assert iml.lemma1_sides(2, 3) == (14, 15)
    inner = iml.solve_f(3, 12)
    composed = iml.compose_witness(2, 3, inner.f, inner.witness)
    assert iml.verify_witness(6, 6, 12 - 6 + inner.f, composed)[0]
    params = iml.theorem_parameters(3)
    assert params["k"] == 3 and params["epsilon"] == Fraction(1, 100)
    rows = iml.chain_report(8)
    assert len(rows) == 5 and rows[0]["holds"]
    bounds = iml.bounds_ratios([100], jobs=1)
    assert bounds[0]["f_nn"] == 160
    assert abs(bounds[0]["lower_env"] - 210.6495502) < 1e-6


def test_search():
    full = iml.exhaustive_max(6)
    assert (full["best_m"], full["best_f"], full["f_nn"]) == (25, 10, 8)
    sampled = iml.sampled_max(6, 500, 1)
    assert full["f_nn"] <= sampled["best_f"] <= full["best_f"]
    assert sampled == iml.sampled_max(6, 500, 1, jobs=2)


def test_store(tmp_path):
    path = tmp_path / "store.jsonl"
    store = iml.ResultStore(str(path))
    assert store.get(3, 4) is None
    store.put(3, 4, 4)
    assert store.get(3, 10) == 4
    with pytest.raises(iml.IntegrityError):
        store.put(3, 4, 5)
    assert len(iml.ResultStore(str(path))) == 1
