#!/usr/bin/env python3
"""Smoke test of the python bindings against the bundled fixtures."""
import json
import math
import os
import sys

import numpy as np

import cecoh

DATA = sys.argv[1] if len(sys.argv) > 1 else "data"

failures = []


def check(name, cond, detail=""):
    print(f"[{'PASS' if cond else 'FAIL'}] {name}" + (f": {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def load(name):
    with open(os.path.join(DATA, name)) as f:
        return json.load(f)


def mat(rows):
    return np.array([[complex(e[0], e[1]) for e in row] for row in rows])


def main():
    pf = load("obstructed_3x3.json")
    H, S = mat(pf["H"]), mat(pf["S"])
    dH, dS = mat(pf["delta_H1"]), mat(pf["delta_S1"])

    sp = cecoh.joint_spectrum(H, S)
    check("two sectors", len(sp["sectors"]) == 2)
    check("commutant dim 5", sp["commutant_dim"] == 5)
    proj_sum = sum(s["projector"] for s in sp["sectors"])
    check("projectors resolve identity", np.linalg.norm(proj_sum - np.eye(3)) < 1e-10)

    basis = cecoh.commutant(H, S)
    check("five commutant elements", len(basis) == 5)
    check("commutant commutes", all(np.linalg.norm(H @ b - b @ H) < 1e-10 for b in basis))

    check("cohomology theorem", cecoh.cohomology(H, S, method="theorem") == (5, 10, 5))
    check("cohomology brute", cecoh.cohomology(H, S, method="brute") == (5, 10, 5))

    ds = cecoh.solve_first_order(H, S, dH)
    check("first order solves the linear condition",
          np.linalg.norm(H @ ds - ds @ H - (S @ dH - dH @ S)) < 1e-12)

    oc = cecoh.obstruction(H, S, dH, dS)
    check("class norm sqrt(2)", abs(oc["norm"] - math.sqrt(2)) < 1e-10)
    check("observable is Hermitian",
          np.linalg.norm(oc["observable"] - oc["observable"].conj().T) < 1e-12)
    check("feasibility >= 1.4", oc["feasibility_residual"] >= 1.4)

    cont = cecoh.continue_series(H, S, dH, dS, order=6)
    check("continuation obstructed at 2",
          cont["obstructed"] and cont["obstructed_order"] == 2)

    pf2 = load("unobstructed_degenerate_3x3.json")
    cont = cecoh.continue_series(mat(pf2["H"]), mat(pf2["S"]), mat(pf2["delta_H1"]),
                                 order=6)
    check("continuation reaches order 6",
          not cont["obstructed"] and len(cont["h_coeffs"]) == 7)
    check("slope near 7", abs(cont["fitted_slope"] - 7.0) < 0.3)

    rep = json.loads(cecoh.anomaly_report_json(json.dumps(pf), order=6))
    check("json pipeline verdict", rep["anomaly"] is True)

    rep = json.loads(cecoh.verma_check_json("3/2", degree=8))
    check("verma cocycle exact", rep["cocycle"]["passed"] is True)

    try:
        cecoh.joint_spectrum(np.array([[0.0, 1.0], [0.0, 0.0]]), np.zeros((2, 2)))
        check("non-Hermitian rejected", False)
    except ValueError:
        check("non-Hermitian rejected", True)

    try:
        cecoh.anomaly_report_json("{broken", order=6)
        check("broken json rejected", False)
    except ValueError:
        check("broken json rejected", True)

    if failures:
        print(f"{len(failures)} check(s) failed")
        sys.exit(1)
    print("all python smoke checks passed")


if __name__ == "__main__":
    main()
