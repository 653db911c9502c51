"""Build an R-R diagram realising a Whitehead-minimal two-generator presentation."""

from __future__ import annotations

from ..freegroup import BasisMap, oriented
from ..presentations import (
    Presentation,
    PresentationError,
    exponent_triples,
    is_whitehead_minimal,
    rename,
    syllable_stats,
)
from .model import DiagramError, Hexagon, RRDiagram, Strand, cycle_word, trace_cycles, validate


class SynthesisError(ValueError):
    pass


def hexagon_labels(triple: tuple[int, int, int], clockwise: bool = True) -> tuple[int, ...]:
    e1, e2, e3 = triple if clockwise else triple[::-1]
    return (e1, e2, e3, -e1, -e2, -e3)


def _curve_names(n: int) -> list[str]:
    return ["X", "Y"][:n] + [f"Z{i}" for i in range(n - 2)]


def _hookups(counts_a, counts_b, target):
    """All rotations ``r`` whose annulus hookup reproduces the pair counts.

    Strand ``k`` (clockwise around A) lands on B-position ``(r - k) mod N``.
    """
    n = sum(counts_a)
    face_a = [f for f in range(6) for _ in range(counts_a[f])]
    face_b = [g for g in range(6) for _ in range(counts_b[g])]
    out = []
    for r in range(max(n, 1)):
        m = [[0] * 6 for _ in range(6)]
        for k in range(n):
            m[face_a[k]][face_b[(r - k) % n]] += 1
        if m == target:
            out.append(r)
    return out


def _build(labels_a, labels_b, counts_a, counts_b, r) -> RRDiagram:
    n = sum(counts_a)
    pos_a = [(f, i) for f in range(6) for i in range(counts_a[f])]
    pos_b = [(g, j) for g in range(6) for j in range(counts_b[g])]
    strands = []
    for k in range(n):
        strands.append(Strand(("A",) + pos_a[k], ("B",) + pos_b[(r - k) % n], "?"))
    slots_a = tuple(("?",) * c for c in counts_a)
    slots_b = tuple(("?",) * c for c in counts_b)
    return RRDiagram(Hexagon(labels_a, slots_a), Hexagon(labels_b, slots_b), tuple(strands))


def _assign_curves(d: RRDiagram, names_by_cycle: list[str]) -> RRDiagram:
    slots = {"A": [list(f) for f in d.hex_a.slots], "B": [list(f) for f in d.hex_b.slots]}
    owner = {}
    for cyc, name in zip(trace_cycles(d), names_by_cycle):
        for c in cyc.crossings:
            h = d.hexagon(c.hexagon)
            f1, i1 = h.partner(c.face, c.slot)
            slots[c.hexagon][c.face][c.slot] = name
            slots[c.hexagon][f1][i1] = name
            owner[(c.hexagon, f1, i1)] = name
            owner[(c.hexagon, c.face, c.slot)] = name
    strands = tuple(Strand(s.a, s.b, owner[s.a]) for s in d.strands)
    return RRDiagram(Hexagon(d.hex_a.labels, tuple(map(tuple, slots["A"]))),
                     Hexagon(d.hex_b.labels, tuple(map(tuple, slots["B"]))), strands)


def diagram_from_hookup(labels_a, labels_b, counts_a, counts_b, rotation: int,
                        names: list[str] | None = None) -> RRDiagram:
    """Diagram with the given faces, slot counts and annulus rotation.

    Curves are named per traced cycle (``X``, ``Y``, then ``Z0``...) unless
    ``names`` gives one id per cycle.
    """
    if sum(counts_a) != sum(counts_b):
        raise SynthesisError("hexagons carry different numbers of endpoints")
    d = _build(tuple(labels_a), tuple(labels_b), list(counts_a), list(counts_b), rotation)
    cycles = trace_cycles(d)
    names = names or _curve_names(len(cycles))
    if len(names) != len(cycles):
        raise SynthesisError(f"{len(cycles)} cycles but {len(names)} names")
    return _assign_curves(d, list(names))


def synthesize(p: Presentation, clockwise: bool = True) -> RRDiagram:
    """R-R diagram whose X, Y curves read the relators of ``p``.

    ``clockwise`` picks the A-hexagon chirality (e1, e2, e3, ...) versus
    (e3, e2, e1, ...); the B-hexagon order is then forced.
    """
    if len(p.generators) != 2:
        raise SynthesisError("synthesis needs a two-generator presentation")
    g1, g2 = p.generators
    p = rename(p, BasisMap.relabel({g1: "A", g2: "B"})) if (g1, g2) != ("A", "B") else p
    if not is_whitehead_minimal(p):
        raise SynthesisError("not Whitehead-minimal")
    try:
        stats = syllable_stats(p)
        triples = exponent_triples(stats)
    except PresentationError as exc:
        raise SynthesisError(str(exc)) from exc
    labels_a = hexagon_labels(triples["A"], clockwise)
    counts_a = [stats.count("A", e) if e else 0 for e in labels_a]
    wanted = sorted((oriented(r) for r in p.relators), key=str)
    found = []
    tried = []
    for b_clockwise in (True, False):
        labels_b = hexagon_labels(triples["B"], b_clockwise)
        counts_b = [stats.count("B", e) if e else 0 for e in labels_b]
        if sum(counts_a) != sum(counts_b):
            raise SynthesisError(f"A-hexagon has {sum(counts_a)} endpoints, B-hexagon {sum(counts_b)}")
        target = [[stats.pair_count(-la, lb) for lb in labels_b] for la in labels_a]
        rs = _hookups(counts_a, counts_b, target)
        tried.append((labels_b, target))
        for r in rs:
            d = _build(labels_a, labels_b, counts_a, counts_b, r)
            cycles = trace_cycles(d)
            words = [oriented(cycle_word(d, c)) for c in cycles]
            if sorted(words, key=str) != wanted:
                continue
            names = []
            for w in words:
                idx = [i for i, rel in enumerate(p.relators) if oriented(rel) == w and
                       _curve_names(len(p.relators))[i] not in names]
                names.append(_curve_names(len(p.relators))[idx[0]])
            found.append(_assign_curves(d, names))
    if not found:
        detail = "; ".join(f"B labels {list(lb)} need face-pair counts {t}" for lb, t in tried)
        raise SynthesisError(f"no planar hookup realises the presentation ({detail})")
    if len(set(found)) > 1:
        raise SynthesisError(f"{len(set(found))} distinct hookups realise the presentation")
    d = found[0]
    try:
        validate(d)
    except DiagramError as exc:
        raise SynthesisError(f"synthesised diagram is invalid: {exc}") from exc
    return d
