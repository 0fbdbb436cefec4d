"""Compare the CLI against sympy on a few ideals.

Reduced lex and grevlex bases come from sympy.groebner; Hilbert function
values are counted from sympy's leading monomials.
"""
import itertools
import json
import subprocess
import sys

import sympy as sp

x, y, z, t = sp.symbols("x y z t")
GENS = (x, y, z, t)

IDEALS = [
    "x*z - y^2; y*t - z^2; x*t - y*z",
    "x*y - z*t; x^2 + y^2 - z^2 - t^2",
    "x^2; x*y; x*z^2; y^4",
    "x^2 - 2/3*y*z + t^2; x*y*z - t^3 + 5*x^2*t",
    "2*x*y + 3*z^2; y^2 - x*t; x*z*t - y^3",
]


def cli(exe, *args):
    out = subprocess.run([exe, *args, "--json"], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def to_sympy(text):
    return [sp.sympify(g.replace("^", "**")) for g in text.split(";")]


def monic(p, order):
    poly = sp.Poly(p, *GENS)
    return sp.expand(p / poly.LC(order=order))


def hf_from_leading(lms, n):
    count = 0
    for e in itertools.product(range(n + 1), repeat=4):
        if sum(e) != n:
            continue
        if any(all(a >= b for a, b in zip(e, m)) for m in lms):
            count += 1
    return count


def main(exe):
    failures = 0
    for text in IDEALS:
        polys = to_sympy(text)
        for order, name in (("lex", "lex"), ("grevlex", "degrevlex")):
            G = sp.groebner(polys, *GENS, order=order)
            want = {sp.expand(monic(g, order)) for g in G.exprs}
            got = {sp.expand(monic(sp.sympify(g.replace("^", "**")), order))
                   for g in cli(exe, "gb", "--order", name, "--text", text)["basis"]}
            if want != got:
                failures += 1
                print(f"FAIL gb {name} {text}\n  sympy {sorted(map(str, want))}\n  cli   {sorted(map(str, got))}")
        G = sp.groebner(polys, *GENS, order="grevlex")
        lms = [sp.Poly(g, *GENS).monoms(order="grevlex")[0] for g in G.exprs]
        want = [hf_from_leading(lms, n) for n in range(8)]
        got = cli(exe, "hf", "--upto", "7", "--text", text)["hilbert_function"]
        if want != got:
            failures += 1
            print(f"FAIL hf {text}: sympy {want} cli {got}")
    print(f"{len(IDEALS)} ideals, {failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
