"""Regenerate the bundled data files.

fig9b.json comes from synthesis of the second-splitting presentation;
fig9a.json from the search in reconstruct_fig9a.py.  Both get their marked
curves attached here.  chain.json is the elimination script with expects.
"""

import json
import subprocess
import sys
from dataclasses import replace
from pathlib import Path

from heegaard_rr.freegroup import cword
from heegaard_rr.presentations import Presentation
from heegaard_rr.rrdiagram import MarkedCurve, parse, serialize, synthesize

DATA = Path(__file__).resolve().parent.parent / "src" / "heegaard_rr" / "data"

STAGE0 = "<A,C,D,E | A^5De^3, dA^2cA^2e^2, DC^2DC^3, A^7Dc(A^7DcA^7cA^2c)^2>"
STAGE1 = "<A,C,E | A^7cA^2e^5, a^5E^3C^2a^5E^3C^3, A^2E^3c(A^2E^3cA^7cA^2c)^2>"
STAGE2 = "<A,E | A^9e^5(A^2E^3A^2e^5A^9e^5)^2, E^8a^7(E^8a^7E^5a^2E^5a^7)^2>"
STAGE3 = "<A,B | A^8B^7(A^8B^7A^5B^2A^5B^7)^2, A^5B^9(A^5B^9A^5B^2a^3B^2)^2>"


def marked(*specs):
    return tuple(MarkedCurve(i, cword(h), cword(hp)) for i, h, hp in specs)


def main():
    DATA.mkdir(exist_ok=True)
    d9b = synthesize(Presentation.parse(STAGE3))
    d9b = replace(d9b, marked_curves=marked(("alpha", "A^8B^7", "x^2"), ("beta", "B^7", "X^2Y^7")))
    (DATA / "fig9b.json").write_text(serialize(d9b) + "\n")

    out = subprocess.run([sys.executable, str(Path(__file__).with_name("reconstruct_fig9a.py"))],
                         check=True, capture_output=True, text=True).stdout.split("\n")
    d9a = parse(out[0])
    d9a = replace(d9a, marked_curves=marked(
        ("alpha", "A^5B^5", "X^3"), ("beta", "B^5", "Y^5x^3Y^2"),
        ("alpha_perp", "b^5A^2B^2A^2", "X^2"), ("beta_perp", "B^2", "x^5y^3")))
    (DATA / "fig9a.json").write_text(serialize(d9a) + "\n")

    chain = {
        "start": STAGE0,
        "steps": [
            {"op": "expect", "presentation": STAGE0},
            {"op": "eliminate", "relator": 0, "generator": "D"},
            {"op": "expect", "presentation": STAGE1},
            {"op": "eliminate", "relator": 0, "generator": "C"},
            {"op": "expect", "presentation": STAGE2},
            {"op": "invert", "relator": 0},
            {"op": "rename", "map": {"E": "A", "a": "B"}},
            {"op": "permute", "order": [1, 0]},
            {"op": "expect", "presentation": STAGE3},
        ],
    }
    (DATA / "chain.json").write_text(json.dumps(chain, indent=2) + "\n")


if __name__ == "__main__":
    main()
