"""R-R diagram data model, file format, validation and word extraction.

A diagram has two hexagons, ``A`` and ``B``.  Face ``f`` and face ``f + 3`` of
a hexagon are opposite; their labels are negatives of each other and each
label is the sum of its two neighbours.  Slots on a face are listed in
clockwise order around the hexagon (left to right seen from outside).  Slot
``i`` of face ``f`` and slot ``n - 1 - i`` of the opposite face are the two
ends of one connection across the handle.  Strands run through the annulus
between the hexagons, each joining an A-slot to a B-slot.

Traversing a curve, crossing a handle by entering at a face labelled ``e``
records the syllable ``P^e`` for that handle ``P``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Iterable

from ..freegroup import CyclicWord, Letter, WordError, oriented
from ..presentations import Presentation

HEXES = ("A", "B")


class DiagramError(ValueError):
    """Schema or invariant violation; ``invariant`` names the broken rule."""

    def __init__(self, message: str, invariant: str = "schema", path: str = ""):
        self.invariant = invariant
        self.path = path
        where = f" at {path}" if path else ""
        super().__init__(f"[{invariant}]{where} {message}")


Endpoint = tuple[str, int, int]  # (hexagon, face, slot)


@dataclass(frozen=True)
class Hexagon:
    labels: tuple[int, ...]
    slots: tuple[tuple[str, ...], ...]

    def positions(self) -> list[tuple[int, int]]:
        """(face, slot) in clockwise order around the hexagon."""
        return [(f, i) for f in range(6) for i in range(len(self.slots[f]))]

    def partner(self, face: int, slot: int) -> tuple[int, int]:
        """Other end of the connection through ``(face, slot)``."""
        opp = (face + 3) % 6
        return opp, len(self.slots[opp]) - 1 - slot

    def connections(self) -> int:
        return sum(len(self.slots[f]) for f in range(3))


@dataclass(frozen=True)
class Strand:
    a: Endpoint
    b: Endpoint
    curve: str


@dataclass(frozen=True)
class MarkedCurve:
    id: str
    word_h: CyclicWord
    word_hprime: CyclicWord


@dataclass(frozen=True)
class RRDiagram:
    hex_a: Hexagon
    hex_b: Hexagon
    strands: tuple[Strand, ...]
    marked_curves: tuple[MarkedCurve, ...] = ()

    def hexagon(self, name: str) -> Hexagon:
        return self.hex_a if name == "A" else self.hex_b

    def marked(self, curve_id: str) -> MarkedCurve:
        for m in self.marked_curves:
            if m.id == curve_id:
                return m
        raise KeyError(curve_id)

    def curve_ids(self) -> list[str]:
        ids = {s.curve for s in self.strands}
        for h in (self.hex_a, self.hex_b):
            for face in h.slots:
                ids.update(face)
        return sorted(ids)


# -- (de)serialisation -------------------------------------------------------


def _expect(cond: bool, msg: str, path: str) -> None:
    if not cond:
        raise DiagramError(msg, "schema", path)


def _hex_from_json(obj: Any, path: str) -> Hexagon:
    _expect(isinstance(obj, dict), "hexagon must be an object", path)
    labels = obj.get("labels")
    slots = obj.get("slots")
    _expect(isinstance(labels, list) and len(labels) == 6
            and all(isinstance(x, int) and not isinstance(x, bool) for x in labels),
            "labels must be 6 integers", f"{path}.labels")
    _expect(isinstance(slots, list) and len(slots) == 6, "slots must list 6 faces", f"{path}.slots")
    for f, face in enumerate(slots):
        _expect(isinstance(face, list) and all(isinstance(c, str) and c for c in face),
                "face slots must be curve ids", f"{path}.slots[{f}]")
    return Hexagon(tuple(labels), tuple(tuple(face) for face in slots))


def _endpoint(obj: Any, path: str) -> Endpoint:
    _expect(isinstance(obj, list) and len(obj) == 3, "endpoint must be [hex, face, slot]", path)
    h, f, i = obj
    _expect(h in HEXES, f"unknown hexagon {h!r}", path)
    _expect(isinstance(f, int) and 0 <= f < 6, "face index out of range", path)
    _expect(isinstance(i, int) and i >= 0, "slot index must be >= 0", path)
    return (h, f, i)


def from_json(obj: Any, check: bool = True) -> RRDiagram:
    _expect(isinstance(obj, dict), "diagram must be a JSON object", "$")
    unknown = set(obj) - {"hex_a", "hex_b", "strands", "marked_curves"}
    _expect(not unknown, f"unknown keys {sorted(unknown)}", "$")
    for key in ("hex_a", "hex_b", "strands"):
        _expect(key in obj, f"missing key {key}", "$")
    hex_a = _hex_from_json(obj["hex_a"], "$.hex_a")
    hex_b = _hex_from_json(obj["hex_b"], "$.hex_b")
    _expect(isinstance(obj["strands"], list), "strands must be a list", "$.strands")
    strands = []
    for k, s in enumerate(obj["strands"]):
        path = f"$.strands[{k}]"
        _expect(isinstance(s, list) and len(s) == 3 and isinstance(s[2], str),
                "strand must be [endpoint, endpoint, curve_id]", path)
        e1, e2 = _endpoint(s[0], path + "[0]"), _endpoint(s[1], path + "[1]")
        if e1[0] == "B" and e2[0] == "A":
            e1, e2 = e2, e1
        if (e1[0], e2[0]) != ("A", "B"):
            raise DiagramError("strand must join hexagon A to hexagon B", "annulus", path)
        strands.append(Strand(e1, e2, s[2]))
    marked = []
    for k, m in enumerate(obj.get("marked_curves", [])):
        path = f"$.marked_curves[{k}]"
        _expect(isinstance(m, dict) and {"id", "word_h", "word_hprime"} <= set(m),
                "marked curve needs id, word_h, word_hprime", path)
        try:
            marked.append(MarkedCurve(m["id"], CyclicWord.parse(m["word_h"]),
                                      CyclicWord.parse(m["word_hprime"])))
        except WordError as exc:
            raise DiagramError(str(exc), "schema", path) from exc
    d = RRDiagram(hex_a, hex_b, tuple(sorted(strands, key=lambda s: (s.a, s.b))), tuple(marked))
    if check:
        validate(d)
    return d


def to_json(d: RRDiagram) -> dict:
    def hexj(h: Hexagon) -> dict:
        return {"labels": list(h.labels), "slots": [list(face) for face in h.slots]}

    obj = {
        "hex_a": hexj(d.hex_a),
        "hex_b": hexj(d.hex_b),
        "strands": [[list(s.a), list(s.b), s.curve] for s in sorted(d.strands, key=lambda s: (s.a, s.b))],
    }
    if d.marked_curves:
        obj["marked_curves"] = [{"id": m.id, "word_h": str(m.word_h), "word_hprime": str(m.word_hprime)}
                                for m in d.marked_curves]
    return obj


def serialize(d: RRDiagram) -> str:
    return json.dumps(to_json(d), separators=(",", ":"), ensure_ascii=False)


def parse(text: str, check: bool = True) -> RRDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"invalid JSON: {exc}", "schema", "$") from exc
    return from_json(obj, check=check)


def load(path) -> RRDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def content_hash(d: RRDiagram) -> str:
    return hashlib.sha256(serialize(d).encode("utf-8")).hexdigest()


# -- validation --------------------------------------------------------------


def check_labels(labels: Iterable[int], path: str = "") -> None:
    lab = tuple(labels)
    for f in range(6):
        if lab[f] != -lab[(f + 3) % 6]:
            raise DiagramError(f"opposite faces {f}, {(f + 3) % 6} need negated labels {lab}",
                               "label-shape", path)
        if lab[f] != lab[(f - 1) % 6] + lab[(f + 1) % 6]:
            raise DiagramError(f"label of face {f} is not the sum of its neighbours {lab}",
                               "label-shape", path)
    if gcd(lab[0], lab[2]) != 1:
        raise DiagramError(f"labels {lab} are not coprime", "label-gcd", path)


def _validate_hexagon(h: Hexagon, name: str) -> None:
    path = f"hex_{name.lower()}"
    check_labels(h.labels, path)
    for f in range(3):
        if len(h.slots[f]) != len(h.slots[f + 3]):
            raise DiagramError(f"faces {f} and {f + 3} carry {len(h.slots[f])} and "
                               f"{len(h.slots[f + 3])} slots", "opposite-slot-count", path)
    for f in range(6):
        if h.labels[f] == 0 and h.slots[f]:
            raise DiagramError(f"face {f} has label 0 but carries slots", "label-shape", path)
        for i, c in enumerate(h.slots[f]):
            g, j = h.partner(f, i)
            if h.slots[g][j] != c:
                raise DiagramError(f"slot ({f},{i}) is {c} but its connection ends at "
                                   f"({g},{j}) on {h.slots[g][j]}", "connection-consistency", path)


def strand_order(d: RRDiagram) -> list[int]:
    """B-positions of the strands listed in clockwise A-order."""
    pos_a = {p: k for k, p in enumerate(d.hex_a.positions())}
    pos_b = {p: k for k, p in enumerate(d.hex_b.positions())}
    ordered = sorted(d.strands, key=lambda s: pos_a[s.a[1:]])
    return [pos_b[s.b[1:]] for s in ordered]


def is_planar_order(order: list[int]) -> bool:
    """Disjoint arcs across an annulus: clockwise order on one side is the
    counterclockwise order on the other, up to rotation."""
    n = len(order)
    if n <= 1:
        return True
    shift = (order[0]) % n
    return all((order[k] + k) % n == shift for k in range(n))


def validate(d: RRDiagram) -> None:
    _validate_hexagon(d.hex_a, "A")
    _validate_hexagon(d.hex_b, "B")
    used: dict[Endpoint, int] = {}
    for k, s in enumerate(d.strands):
        for end in (s.a, s.b):
            h = d.hexagon(end[0])
            _, f, i = end
            if i >= len(h.slots[f]):
                raise DiagramError(f"endpoint {list(end)} is not a declared slot", "slot-coverage",
                                   f"strands[{k}]")
            if end in used:
                raise DiagramError(f"slot {list(end)} used by strands {used[end]} and {k}",
                                   "slot-coverage", f"strands[{k}]")
            used[end] = k
            if h.slots[f][i] != s.curve:
                raise DiagramError(f"strand curve {s.curve} meets slot {list(end)} of curve "
                                   f"{h.slots[f][i]}", "strand-curve", f"strands[{k}]")
    for name in HEXES:
        for f, i in d.hexagon(name).positions():
            if (name, f, i) not in used:
                raise DiagramError(f"slot {[name, f, i]} has no strand", "slot-coverage")
    if not is_planar_order(strand_order(d)):
        raise DiagramError("strands cross in the annulus", "planarity")
    counts: dict[str, int] = {}
    for cyc in trace_cycles(d):
        counts[cyc.curve] = counts.get(cyc.curve, 0) + 1
    for c in ("X", "Y"):
        if counts.get(c, 1) != 1:
            raise DiagramError(f"curve {c} traces {counts[c]} cycles", "curve-cycles")


# -- traversal ---------------------------------------------------------------


@dataclass(frozen=True)
class Crossing:
    """One connection crossed by a curve: entered at ``(face, slot)`` of ``hexagon``."""

    hexagon: str
    face: int
    slot: int


@dataclass
class Cycle:
    curve: str
    crossings: list[Crossing] = field(default_factory=list)


def trace_cycles(d: RRDiagram) -> list[Cycle]:
    """Closed cycles of strands and connections, each started at its first A-slot."""
    by_end: dict[Endpoint, Strand] = {}
    for s in d.strands:
        by_end[s.a] = s
        by_end[s.b] = s
    seen: set[Endpoint] = set()
    cycles = []
    for f, i in d.hex_a.positions():
        start = ("A", f, i)
        if start in seen:
            continue
        cyc = Cycle(d.hex_a.slots[f][i])
        cur = start
        while True:
            h, f0, i0 = cur
            hexagon = d.hexagon(h)
            f1, i1 = hexagon.partner(f0, i0)
            seen.add(cur)
            seen.add((h, f1, i1))
            cyc.crossings.append(Crossing(h, f0, i0))
            s = by_end.get((h, f1, i1))
            if s is None:
                raise DiagramError(f"curve {cyc.curve} does not close up at {[h, f1, i1]}",
                                   "curve-cycles")
            cur = s.b if s.a == (h, f1, i1) else s.a
            if cur == start:
                break
            if cur in seen:
                raise DiagramError(f"curve {cyc.curve} revisits {list(cur)}", "curve-cycles")
        cycles.append(cyc)
    return cycles


def cycle_word(d: RRDiagram, cyc: Cycle) -> CyclicWord:
    letters = []
    for c in cyc.crossings:
        e = d.hexagon(c.hexagon).labels[c.face]
        letters.extend([Letter(c.hexagon, 1 if e > 0 else -1)] * abs(e))
    return CyclicWord(tuple(letters))


def extract_words(d: RRDiagram) -> Presentation:
    """Relators read off the diagram curves, X first then Y (then any others)."""
    cycles = trace_cycles(d)
    order = {"X": 0, "Y": 1}
    cycles.sort(key=lambda c: (order.get(c.curve, 2), c.curve))
    return Presentation(("A", "B"), tuple(oriented(cycle_word(d, c)) for c in cycles))


def curve_words(d: RRDiagram) -> dict[str, CyclicWord]:
    out = {}
    for c in trace_cycles(d):
        if c.curve in out:
            raise DiagramError(f"curve {c.curve} has several cycles", "curve-cycles")
        out[c.curve] = oriented(cycle_word(d, c))
    return out


def complexity(d: RRDiagram) -> int:
    return sum(len(h.slots[f]) * abs(h.labels[f]) for h in (d.hex_a, d.hex_b) for f in range(3))


def relabel_curves(d: RRDiagram, mapping: dict[str, str]) -> RRDiagram:
    """Rename curve ids (e.g. swap X and Y)."""
    m = lambda c: mapping.get(c, c)

    def hx(h: Hexagon) -> Hexagon:
        return Hexagon(h.labels, tuple(tuple(m(c) for c in face) for face in h.slots))

    strands = tuple(Strand(s.a, s.b, m(s.curve)) for s in d.strands)
    return RRDiagram(hx(d.hex_a), hx(d.hex_b), strands, d.marked_curves)


def describe(d: RRDiagram) -> str:
    """Plain-text dump of the diagram."""
    lines = []
    for name in HEXES:
        h = d.hexagon(name)
        lines.append(f"hexagon {name} labels {list(h.labels)}")
        for f in range(6):
            lines.append(f"  face {f} ({h.labels[f]:+d}): {' '.join(h.slots[f]) or '-'}")
    lines.append(f"{len(d.strands)} strands, complexity {complexity(d)}")
    for m in d.marked_curves:
        lines.append(f"marked {m.id}: {m.word_h} in H, {m.word_hprime} in H'")
    return "\n".join(lines)
