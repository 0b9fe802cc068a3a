"""Recomputes the condops golden report from the fixture with Fraction
arithmetic and mpmath, independently of the C++ library.

Usage: check_condops_golden.py SCENARIO VECTOR GOLDEN_JSON"""
import json
import sys
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 50


def frac(text):
    return Fraction(text)


def fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def main(scenario_path, name, golden_path):
    sc = json.load(open(scenario_path))
    golden = json.load(open(golden_path))
    weights = [frac(w) for w in sc["space"]["weights"]]
    f = [frac(v) for v in sc["vectors"][name]]
    atoms = sc["filtration"][golden["time"]]
    n = len(f)
    cols = {k: [None] * n for k in ("expectation", "sup", "inf", "delta", "nearest", "distance")}
    for atom in atoms:
        mass = sum(weights[w] for w in atom)
        avg = sum(weights[w] * f[w] for w in atom) / mass
        hi = max(f[w] for w in atom)
        lo = min(f[w] for w in atom)
        for w in atom:
            cols["expectation"][w] = avg
            cols["sup"][w] = hi
            cols["inf"][w] = lo
            cols["delta"][w] = hi - lo
            cols["nearest"][w] = (hi + lo) / 2
            cols["distance"][w] = (hi - lo) / 2
    failures = []
    for key, values in cols.items():
        expected = [fmt(v) for v in values]
        if golden[key] != expected:
            failures.append(f"{key}: golden {golden[key]} oracle {expected}")
    for step in golden["lp_limit"]["steps"]:
        p = step["p"]
        gap = mp.mpf(0)
        for atom in atoms:
            mass = sum(weights[w] for w in atom)
            s = sum(mp.mpf(weights[w].numerator) / weights[w].denominator * mp.mpf(abs(f[w]).numerator) ** p
                    / mp.mpf(abs(f[w]).denominator) ** p for w in atom)
            norm = (s / (mp.mpf(mass.numerator) / mass.denominator)) ** (mp.mpf(1) / p)
            top = max(abs(f[w]) for w in atom)
            for w in atom:
                if abs(float(norm) - step["norm"][w]) > 1e-9 * max(1.0, float(top)):
                    failures.append(f"p={p} outcome {w}: golden {step['norm'][w]} oracle {mp.nstr(norm, 15)}")
            gap = max(gap, abs(mp.mpf(top.numerator) / top.denominator - norm))
        if abs(float(gap) - step["gap"]) > 1e-9:
            failures.append(f"p={p}: golden gap {step['gap']} oracle {mp.nstr(gap, 15)}")
    for line in failures:
        print(line)
    print("condops golden matches oracle" if not failures else f"{len(failures)} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
