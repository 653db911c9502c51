"""Flat-torus model of a handle: dual words, handle curves and rectangles.

Each once-punctured torus is R^2 / Z^2 with the puncture at the lattice
points.  Connection classes of faces 0, 1, 2 run along the directions
(1, 0), (1, 1), (0, 1); the faces sit counterclockwise around the puncture
in that order, which is clockwise on the hexagon.  Within a band the
connection with slot index ``i`` on face ``c`` (c < 3) is the ``i``-th
parallel copy along the left normal of its direction.  The cutting-disk
boundary is the closed line of direction ``(label_2, -label_0)``, so its
algebraic intersection with a class-``c`` arc is ``label_c``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..freegroup import CyclicWord, Letter
from .model import HEXES, Hexagon, RRDiagram, trace_cycles

DIRECTIONS = ((1, 0), (1, 1), (0, 1))


def _det(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def disk_direction(h: Hexagon) -> tuple[int, int]:
    return (h.labels[2], -h.labels[0])


def band_owners(d: RRDiagram, hexagon: str) -> dict[tuple[int, int], tuple[str, int]]:
    """(class, band index) -> (curve, +1 if traversed along the class direction)."""
    h = d.hexagon(hexagon)
    out = {}
    for cyc in trace_cycles(d):
        for c in cyc.crossings:
            if c.hexagon != hexagon:
                continue
            if c.face < 3:
                out[(c.face, c.slot)] = (cyc.curve, 1)
            else:
                cls = c.face - 3
                out[(cls, len(h.slots[cls]) - 1 - c.slot)] = (cyc.curve, -1)
    return out


def _edge_crossings(u: tuple[int, int]) -> list[int]:
    """Classes of lattice edges met, in order, by one period of a generic line
    of primitive direction ``u``."""
    ux, uy = u
    n = 2 * (abs(ux) + abs(uy)) + 3
    for k in range(1, 50):
        x0, y0 = Fraction(1, n + k), Fraction(1, (n + k) * (n + k + 1))
        events = []
        if ux:
            events += [((m - x0) / ux, 2) for m in range(-abs(ux) - 1, abs(ux) + 2)]
        if uy:
            events += [((m - y0) / uy, 0) for m in range(-abs(uy) - 1, abs(uy) + 2)]
        if uy - ux:
            events += [((m - y0 + x0) / (uy - ux), 1)
                       for m in range(-abs(uy - ux) - 1, abs(uy - ux) + 2)]
        events = sorted(e for e in events if 0 <= e[0] < 1)
        times = [t for t, _ in events]
        if len(set(times)) == len(times):
            return [cls for _, cls in events]
    raise RuntimeError("no generic base point found")


def handle_crossings(d: RRDiagram, hexagon: str, u: tuple[int, int]) -> list[Letter]:
    """Signed curve letters met by the closed curve of direction ``u`` in a handle."""
    if gcd(*u) != 1:
        raise ValueError(f"direction {u} is not primitive")
    h = d.hexagon(hexagon)
    owners = band_owners(d, hexagon)
    letters = []
    for cls in _edge_crossings(u):
        k = len(h.slots[cls])
        v = DIRECTIONS[cls]
        order = range(k) if _det(v, u) > 0 else range(k - 1, -1, -1)
        for i in order:
            curve, along = owners[(cls, i)]
            sign = 1 if _det(u, v) * along > 0 else -1
            letters.append(Letter(curve, sign))
    return letters


def dual_words(d: RRDiagram) -> dict[str, CyclicWord]:
    """Crossings of X and Y read along the cutting-disk boundaries of A and B."""
    out = {}
    for name in HEXES:
        h = d.hexagon(name)
        if not any(h.slots):
            out[name] = CyclicWord()
            continue
        out[name] = CyclicWord(tuple(handle_crossings(d, name, disk_direction(h))))
    return out


def raw_dual_letters(d: RRDiagram) -> dict[str, list[Letter]]:
    """Dual crossing sequences without cancellation, for graph building."""
    out = {}
    for name in HEXES:
        h = d.hexagon(name)
        out[name] = handle_crossings(d, name, disk_direction(h)) if any(h.slots) else []
    return out


def class_direction(h: Hexagon, label: int) -> tuple[int, int]:
    """Direction of the closed curve parallel to the class whose label is ``label``,
    oriented so the curve reads ``P^label``."""
    for c in range(3):
        for sign in (1, -1):
            if h.labels[c] * sign == label:
                v = DIRECTIONS[c]
                return (v[0] * sign, v[1] * sign)
    raise ValueError(f"no face labelled {label} in {list(h.labels)}")


def handle_curve_word(d: RRDiagram, hexagon: str, label: int) -> CyclicWord:
    """H'-side word of the closed curve in handle ``hexagon`` reading ``P^label``."""
    h = d.hexagon(hexagon)
    return CyclicWord(tuple(handle_crossings(d, hexagon, class_direction(h, label))))


def slope_curve_word(d: RRDiagram, hexagon: str, u: tuple[int, int]) -> tuple[CyclicWord, CyclicWord]:
    """(H-word, H'-word) of the closed handle curve of direction ``u``."""
    h = d.hexagon(hexagon)
    e = _det(disk_direction(h), u)
    hw = CyclicWord((Letter(hexagon, 1 if e > 0 else -1),) * abs(e))
    return hw, CyclicWord(tuple(handle_crossings(d, hexagon, u)))


@dataclass(frozen=True)
class RectangleFamily:
    tag: str
    values: tuple[int, ...]

    def __bool__(self) -> bool:
        return bool(self.values)


FAMILY_TAGS = ("ax", "ay", "bx", "by")


def detect_rectangles(d: RRDiagram) -> dict[str, RectangleFamily]:
    """Rectangles between adjacent parallel X (or Y) connections, by handle.

    Each band is inspected once (faces 0-2); the opposite face shows the same
    rectangles in reverse.
    """
    vals: dict[str, list[int]] = {t: [] for t in FAMILY_TAGS}
    for name in HEXES:
        h = d.hexagon(name)
        for f in range(3):
            face = h.slots[f]
            for i in range(len(face) - 1):
                if face[i] == face[i + 1] and face[i] in ("X", "Y"):
                    vals[name.lower() + face[i].lower()].append(abs(h.labels[f]))
    return {t: RectangleFamily(t, tuple(sorted(v))) for t, v in vals.items()}


def class_counts(d: RRDiagram) -> dict[str, Counter]:
    """Per hexagon, connections of each curve in each class (keyed by |label|)."""
    out = {}
    for name in HEXES:
        h = d.hexagon(name)
        cnt: Counter = Counter()
        for f in range(3):
            for c in h.slots[f]:
                cnt[(c, abs(h.labels[f]))] += 1
        out[name] = cnt
    return out
