#!/usr/bin/env python3
"""Reference equivariant K-ranks for the shipped examples, computed without
any triangulation.

rank K^G_* = sum over g of rank K_*(X^g / G). Rational cohomology of X^g / G is
the G-invariant part of H^*(X^g), so:

* g = e: invariants of rho on H^*(T^2) = (1, ker(rho - I) on Z^2, det rho).
* g != e on T^2: X^g is finite; enumerate it on the (1/12) grid, check
  |X^g| = |det(rho^k - I)|, and count G-orbits.
* S^4 with a reflection of r axes: H^*(S^4)^G has rank 1 + [det = +1];
  X^g is a sphere of dimension 4 - r > 0 with trivial G-action.

Writes tests/fixtures/strata_oracle.json.
"""
import json
import sys
from fractions import Fraction
from itertools import product
from pathlib import Path

import sympy

GENERATORS = {
    2: [[-1, 0], [0, -1]],
    3: [[-1, -1], [1, 0]],
    4: [[0, -1], [1, 0]],
    6: [[0, -1], [1, 1]],
}
GRID = 12


def mat_pow(m, k):
    return sympy.Matrix(m) ** k


def apply(m, x):
    return tuple(Fraction(sum(int(m[i, j]) * x[j] for j in range(2))) % 1 for i in range(2))


def torus_case(order):
    rho = sympy.Matrix(GENERATORS[order])
    points = [tuple(Fraction(a, GRID) for a in c) for c in product(range(GRID), repeat=2)]
    strata = []
    ident = sympy.eye(2)
    inv_h1 = 2 - (rho - ident).rank()
    inv_h2 = 1 if rho.det() == 1 else 0
    strata.append({"g": 0, "fixed_points": None, "even": 1 + inv_h2, "odd": inv_h1})
    for k in range(1, order):
        rk = mat_pow(rho, k)
        fixed = [x for x in points if apply(rk, x) == x]
        expected = abs((rk - ident).det())
        if len(fixed) != expected:
            sys.exit(f"order {order}, k={k}: grid finds {len(fixed)} fixed points, det gives {expected}")
        seen, orbits = set(), 0
        for x in fixed:
            if x in seen:
                continue
            orbits += 1
            y = x
            for _ in range(order):
                seen.add(y)
                y = apply(rho, y)
        strata.append({"g": k, "fixed_points": len(fixed), "even": orbits, "odd": 0})
    return strata


def sphere_case(axes=5, reflected=2):
    if axes - 1 - reflected <= 0:
        raise ValueError("fixed sphere must have positive dimension")
    det = (-1) ** reflected
    return [
        {"g": 0, "fixed_points": None, "even": 1 + (1 if det == 1 else 0), "odd": 0},
        {"g": 1, "fixed_points": None, "even": 2, "odd": 0},
    ]


def summarize(strata):
    return {"k0_rank": sum(s["even"] for s in strata), "k1_rank": sum(s["odd"] for s in strata), "strata": strata}


def main():
    out = {f"torus_z{i}": summarize(torus_case(i)) for i in GENERATORS}
    out["sphere_z2"] = summarize(sphere_case())
    path = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "strata_oracle.json"
    path.write_text(json.dumps(out, indent=1) + "\n")
    for name, v in out.items():
        print(name, v["k0_rank"], v["k1_rank"])


if __name__ == "__main__":
    main()
