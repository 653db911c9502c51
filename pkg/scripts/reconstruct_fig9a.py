"""Search for the first-splitting diagram consistent with its known curve data.

Inputs: the Y-relator (length 68), total complexity 121, first homology Z/799,
and the handle-curve words of the B-handle curves reading B^5 and B^2.
Enumerates class counts, hexagon chiralities and annulus rotations; prints
every survivor as canonical JSON.
"""

import sys

from heegaard_rr.freegroup import cword, oriented, signed_permutations, substitute
from heegaard_rr.presentations import Presentation, abelian_invariants
from heegaard_rr.rrdiagram import DiagramError, cycle_word, trace_cycles, validate, serialize
from heegaard_rr.rrdiagram.geometry import handle_curve_word
from heegaard_rr.rrdiagram.synth import diagram_from_hookup, hexagon_labels

Y_WORD = oriented(cword("A^7B^7(A^7B^7A^7B^2A^2B^2)^2"))
TARGETS = {5: "Y^5x^3Y^2", 2: "x^5y^3"}


def equivalent(w, text):
    """Equal up to inversion and signed relabeling of X, Y."""
    t = cword(text)
    for m in signed_permutations(("X", "Y")):
        img = substitute(t, m)
        if w in (img, img.inverse()):
            return True
    return False


def counts_for(labels, per_label):
    return [per_label.get(abs(e), 0) for e in labels]


def main():
    found = []
    # Y contributes A: 7 x5, 2 x2; B: 7 x3, 2 x4.
    for n7 in range(4):
        n5, n2 = 5 - n7, 3 - n7
        for m5 in range(5):
            for m7 in range(4):
                m2 = 8 - n7 - m5 - m7
                if m2 < 0 or 5 * m5 + 7 * m7 + 2 * m2 != 22:
                    continue
                a_counts = {5: m5, 7: 5 + m7, 2: 2 + m2}
                b_counts = {5: n5, 7: 3 + n7, 2: 4 + n2}
                la = hexagon_labels((5, 7, 2), True)
                ca = counts_for(la, a_counts)
                for bcw in (True, False):
                    lb = hexagon_labels((5, 7, 2), bcw)
                    cb = counts_for(lb, b_counts)
                    n = sum(ca)
                    for r in range(n):
                        d = diagram_from_hookup(la, lb, ca, cb, r)
                        cycles = trace_cycles(d)
                        if len(cycles) != 2:
                            continue
                        words = [oriented(cycle_word(d, c)) for c in cycles]
                        if Y_WORD not in words:
                            continue
                        names = ["Y" if w == Y_WORD else "X" for w in words]
                        if sorted(names) != ["X", "Y"]:
                            continue
                        d = diagram_from_hookup(la, lb, ca, cb, r, names)
                        try:
                            validate(d)
                        except DiagramError:
                            continue
                        xw = words[names.index("X")]
                        p = Presentation(("A", "B"), (xw, Y_WORD))
                        if len(xw) != 53 or abelian_invariants(p) != ((799,), 0):
                            continue
                        ok = all(equivalent(handle_curve_word(d, "B", lab), t)
                                 for lab, t in TARGETS.items())
                        print(f"n7={n7} m=({m5},{m7},{m2}) bcw={bcw} r={r} X={xw} curves_ok={ok}",
                              file=sys.stderr)
                        if ok:
                            found.append(d)
    print(f"{len(found)} survivors", file=sys.stderr)
    for d in found:
        print(serialize(d))


if __name__ == "__main__":
    main()
