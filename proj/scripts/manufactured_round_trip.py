#!/usr/bin/env python3
"""Manufactured round trip through the command-line tool.

Picks c*_k = 1/(1 + k^2) for 0 < |k| <= 3, synthesizes phi on a uniform
alpha grid from h values reported by `dorder eval-h`, solves with
`dorder solve`, and compares the recovered coefficients.
Exit status 0 when max |c_k - c*_k| <= tolerance.
"""

import argparse
import cmath
import json
import math
import os
import subprocess
import sys
import tempfile


def run(tool, *args):
    out = subprocess.run([tool, *args], check=True, capture_output=True, text=True)
    return json.loads(out.stdout)


def h_at(tool, beta, x, k):
    r = run(tool, "--beta", repr(beta), "eval-h", "--x", repr(x), "--k", str(k))
    return complex(r["h"]["re"], r["h"]["im"])


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--tool", default="dorder", help="path to the dorder executable")
    p.add_argument("--problem", choices=["cauchy", "bvp"], default="cauchy")
    p.add_argument("--beta", type=float, default=math.sqrt(2.0))
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=2.0)
    p.add_argument("--a0", type=float, default=1.0)
    p.add_argument("--b0", type=float, default=2.0)
    p.add_argument("--nodes", type=int, default=513)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--tolerance", type=float, default=1e-8)
    args = p.parse_args()

    want = {k: 1.0 / (1.0 + k * k) for k in range(-3, 4) if k != 0}
    weight = {}
    for k in want:
        w = h_at(args.tool, args.beta, args.a, k)
        if args.problem == "bvp":
            w = args.a0 * w + args.b0 * h_at(args.tool, args.beta, args.b, k)
        weight[k] = w

    with tempfile.TemporaryDirectory() as tmp:
        phi_path = os.path.join(tmp, "phi.csv")
        with open(phi_path, "w") as f:
            f.write("alpha,re,im\n")
            for j in range(args.nodes):
                alpha = args.beta * j / (args.nodes - 1)
                v = sum(c * cmath.exp(2j * math.pi * k * alpha / args.beta) * weight[k] for k, c in want.items())
                f.write(f"{alpha!r},{v.real!r},{v.imag!r}\n")

        cmd = ["--beta", repr(args.beta), "--kmax", str(args.kmax), "solve", args.problem,
               "--a", repr(args.a), "--phi", "csv:" + phi_path]
        if args.problem == "bvp":
            cmd += ["--b", repr(args.b), "--a0", repr(args.a0), "--b0", repr(args.b0)]
        result = run(args.tool, *cmd)

    worst = 0.0
    for entry in result["coefficients"]:
        got = complex(entry["re"], entry["im"])
        worst = max(worst, abs(got - want.get(entry["k"], 0.0)))
    ok = worst <= args.tolerance
    print(f"{'PASS' if ok else 'FAIL'} {args.problem} round trip: max |c_k - c*_k| = {worst:.3e} "
          f"(tolerance {args.tolerance:g}, {len(result['coefficients'])} coefficients)")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
