#!/usr/bin/env python3
"""End-to-end checks of the command-line tool: exit codes, schema, determinism."""
import json
import math
import subprocess
import sys
import tempfile
import os

CECOH = sys.argv[1]
DATA = sys.argv[2]

failures = []


def run(*args, stdin=None):
    return subprocess.run([CECOH, *args], capture_output=True, text=True, timeout=120)


def check(name, cond, detail=""):
    line = f"[{'PASS' if cond else 'FAIL'}] {name}"
    if detail and not cond:
        line += f": {detail}"
    print(line)
    if not cond:
        failures.append(name)


def main():
    obstructed = os.path.join(DATA, "obstructed_3x3.json")
    unobstructed = os.path.join(DATA, "unobstructed_degenerate_3x3.json")
    nondegenerate = os.path.join(DATA, "nondegenerate_4x4.json")

    # anomaly pipeline on the worked instance
    r = run("anomaly", obstructed, "--output", "json")
    check("anomaly exit 0", r.returncode == 0, r.stderr)
    rep = json.loads(r.stdout)
    check("schema_version echoed", rep["schema_version"] == "1")
    check("anomaly verdict", rep["anomaly"] is True)
    check("cohomology routes agree", rep["cohomology"]["agree"] is True)
    check("dims (5, 10, 5)",
          [rep["cohomology"]["theorem"][k] for k in ("h0", "h1", "h2")] == [5, 10, 5])
    check("class norm sqrt(2)",
          abs(rep["obstruction"]["norm"] - math.sqrt(2)) < 1e-10)
    check("feasibility residual >= 1.4",
          rep["obstruction"]["feasibility_residual"] >= 1.4)
    check("supplied first order honored", rep["first_order"]["supplied"] is True)
    check("obstructed report has no series", "series" not in rep)

    # determinism: reruns byte-identical
    r2 = run("anomaly", obstructed, "--output", "json")
    check("byte-identical rerun", r.stdout == r2.stdout)

    # report round-trip: a report is a valid problem file giving the same report
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        f.write(r.stdout)
        path = f.name
    try:
        r3 = run("anomaly", path, "--output", "json")
        check("report round-trip", r3.returncode == 0 and r3.stdout == r.stdout)
    finally:
        os.unlink(path)

    # unobstructed continuation
    r = run("anomaly", unobstructed, "--order", "6", "--output", "json")
    check("unobstructed exit 0", r.returncode == 0, r.stderr)
    rep = json.loads(r.stdout)
    check("no anomaly", rep["anomaly"] is False)
    check("series reaches order 6", rep["series"]["order"] == 6)
    check("slope near 7", abs(rep["series"]["fitted_slope"] - 7.0) < 0.3)
    check("nine profile samples", len(rep["series"]["residual_profile"]) == 9)
    ts = [p[0] for p in rep["series"]["residual_profile"]]
    check("profile covers t in [1e-3, 1e-1]",
          abs(ts[0] - 1e-3) < 1e-12 and abs(ts[-1] - 1e-1) < 1e-12)

    # nondegenerate instance: expected clean
    r = run("anomaly", nondegenerate, "--output", "json")
    rep = json.loads(r.stdout)
    check("nondegenerate no anomaly",
          r.returncode == 0 and rep["anomaly"] is False and rep["nondegenerate"] is True)

    # spectrum and cohomology subcommands
    r = run("spectrum", obstructed, "--output", "json")
    rep = json.loads(r.stdout)
    secs = rep["spectrum"]["sectors"]
    check("spectrum sectors sorted", r.returncode == 0 and
          [(s["lambda"], s["mu"], s["multiplicity"]) for s in secs] ==
          [(0.0, 1.0, 1), (1.0, 0.0, 2)])
    r = run("cohomology", obstructed, "--method", "both", "--output", "json")
    rep = json.loads(r.stdout)
    check("cohomology both routes", r.returncode == 0 and
          rep["agree"] is True and rep["brute_force"]["h1"] == 10)

    # text mode
    r = run("anomaly", obstructed)
    check("text anomaly verdict", r.returncode == 0 and "anomaly: yes" in r.stdout)
    r = run("verma-check", "--lambda", "7/3", "--degree", "6")
    check("verma text", r.returncode == 0 and "lambda = 7/3" in r.stdout
          and "exact" in r.stdout)
    r = run("verma-check", "--lambda", "7/3", "--degree", "6", "--output", "json")
    rep = json.loads(r.stdout)
    check("verma json passes", r.returncode == 0 and rep["cocycle"]["passed"] is True)

    # validation failures exit 2
    check("missing file", run("anomaly", "/nonexistent.json").returncode == 2)
    check("unknown subcommand", run("frobnicate").returncode == 2)
    check("unknown method",
          run("cohomology", obstructed, "--method", "fancy").returncode == 2)
    check("bad lambda", run("verma-check", "--lambda", "x").returncode == 2)
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        f.write('{"schema_version":"1","dim":2,'
                '"H":[[[0,0],[1,0]],[[1,0],[0,0]]],'
                '"S":[[[1,0],[0,0]],[[0,0],[0,0]]]}')
        path = f.name
    try:
        r = run("spectrum", path)
        check("noncommuting pair rejected", r.returncode == 2, r.stderr)
    finally:
        os.unlink(path)
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        f.write("{not json")
        path = f.name
    try:
        check("parse failure exit 2", run("spectrum", path).returncode == 2)
    finally:
        os.unlink(path)

    # numerical failures exit 3: an absurd rank tolerance makes the rank
    # ambiguous, an absurd cluster width makes the routes disagree
    r = run("cohomology", obstructed, "--method", "both", "--tol-rank", "0.45")
    check("ambiguous rank exit 3", r.returncode == 3, r.stderr)
    r = run("cohomology", obstructed, "--method", "both", "--tol-cluster", "10")
    check("route disagreement exit 3", r.returncode == 3, r.stderr)

    # tolerance flags take effect: merged clusters under the theorem route
    r = run("cohomology", obstructed, "--method", "theorem", "--tol-cluster", "10",
            "--output", "json")
    rep = json.loads(r.stdout)
    check("cluster override merges sectors", r.returncode == 0 and
          rep["theorem"]["h0"] == 9)

    # seed is echoed verbatim
    r = run("spectrum", obstructed, "--seed", "31337", "--output", "json")
    rep = json.loads(r.stdout)
    check("seed echoed", r.returncode == 0 and rep["seed"] == 31337)

    if failures:
        print(f"{len(failures)} check(s) failed")
        sys.exit(1)
    print("all cli checks passed")


if __name__ == "__main__":
    main()
