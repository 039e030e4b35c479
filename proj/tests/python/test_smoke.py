# Copyright 2026 The cantor-density Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the cantor_density extension module."""

import math
import sys

import cantor_density as cd


def approx(a, b, tol=1e-9):
    return abs(a - b) < tol


def main():
    # coding map and its inverse
    assert cd.pi("(001)") == "1/13"
    assert cd.pi("000(110)") == "4/117"
    assert cd.pi_inverse("1/4") == "(01)"
    assert cd.delta("1/5") == "01(0)"

    # tau and spectrum membership
    assert cd.tau("(01)") == "1/4"
    assert cd.in_gamma("(01)")
    assert not cd.in_gamma("(011)")
    assert cd.classify_gamma("(01)") == "isolated:1"
    assert cd.classify_gamma("(0)") == "accumulation"

    # words
    assert cd.thue_morse(8) == "01101001"
    assert cd.is_admissible("110")
    assert not cd.is_admissible("11")

    # densities
    d = cd.densities("(0)")
    assert d["endpoint_case"]
    assert approx(d["lower"], 0.41700612892108, 1e-9)
    lo, hi = cd.ball_measure("0", "1/3")
    assert lo == "1/2" and hi == "1/2"

    # expansions
    assert approx(cd.solve_base("(10)"), (1 + math.sqrt(5)) / 2, 1e-12)
    assert approx(cd.komornik_loreti(), 1.7872316501829906, 1e-8)
    assert cd.quasi_greedy(2.0, 6) == "111111"

    # dimensions
    golden_dim = math.log((1 + math.sqrt(5)) / 2) / math.log(3)
    r = cd.dim_survivor("1/13")
    assert r["converged"] and approx(r["value"], golden_dim, 1e-8)
    r0 = cd.dim_survivor("0")
    assert approx(r0["value"], math.log(2) / math.log(3), 1e-10)
    closed, engine = cd.lambda_n_dimension(3)
    assert approx(closed, engine, 1e-9)

    # level sets and the staircase
    ls = cd.level_set_dimension("1/13")
    assert ls["kind"] == "e-branch" and approx(ls["dimension"], golden_dim, 1e-6)
    segs = cd.staircase(max_word_len=6)
    assert segs[-1]["psi"] == 0.0
    assert any(s["t_left"] == "4/117" for s in segs)

    # constants
    c = cd.constants()
    assert c["t_G"] == "1/4"
    assert approx(c["t_KL"], 0.0851874, 1e-6)

    # error surfaces
    try:
        cd.pi_inverse("1/2")
    except cd.NotInCantorSet:
        pass
    else:
        raise AssertionError("expected NotInCantorSet")

    print("python smoke: OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
