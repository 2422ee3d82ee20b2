#!/usr/bin/env python3
"""Generate the shipped input-form files in data/.

delta_input.json: the unary theta components (representation numbers of
n^2 over Z and over 1/2+Z), scaled so the mu0 constant term is 24, which
is what the weight relation w = c0(0)/2 forces for a weight-12 form.
const_input.json: the synthetic constant form with c0(0) = 1.
"""
import json
from fractions import Fraction
from pathlib import Path

MAX_EXP = 36  # largest exponent kept; callers only need a few terms
SCALE = 24


def theta_coeffs(half: bool):
    """Representation numbers of x^2 for x in Z (half=False) or 1/2+Z."""
    out = {}
    n = Fraction(1, 2) if half else Fraction(0)
    while n * n <= MAX_EXP:
        out[n * n] = out.get(n * n, 0) + (1 if n == 0 else 2)
        n += 1
    return out


def dump(comp):
    return [[f"{e.numerator}/{e.denominator}" if e.denominator != 1
             else str(e.numerator), SCALE * c]
            for e, c in sorted(comp.items())]


data_dir = Path(__file__).resolve().parent.parent / "data"
data_dir.mkdir(exist_ok=True)

delta = {
    "weight": "-1/2",
    "cosets": {
        "mu0": dump(theta_coeffs(half=False)),
        "mu1": dump(theta_coeffs(half=True)),
    },
}
(data_dir / "delta_input.json").write_text(json.dumps(delta, indent=2) + "\n")

const = {
    "weight": "-1/2",
    "cosets": {"mu0": [["0", 1]], "mu1": []},
}
(data_dir / "const_input.json").write_text(json.dumps(const, indent=2) + "\n")

print("wrote", data_dir / "delta_input.json")
print("wrote", data_dir / "const_input.json")
