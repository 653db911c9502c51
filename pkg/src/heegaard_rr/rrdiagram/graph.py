"""The four-vertex graph of a curve system against a pair of cutting disks."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from ..freegroup import CyclicWord, Letter


class GraphError(ValueError):
    pass


class GraphForm(str, Enum):
    A = "FormA"
    B = "FormB"
    C = "FormC"


@dataclass(frozen=True)
class DiagramGraph:
    ss: int
    tt: int
    mixed: int
    loops: int
    valences: dict = field(default_factory=dict, compare=False, hash=False)
    gens: tuple[str, str] = ("S", "T")

    def edges(self) -> int:
        return self.ss + self.tt + self.mixed + self.loops

    def valence_equations_hold(self) -> bool:
        s, t = self.gens
        v = self.valences
        return v.get(s + "+", 0) == v.get(s + "-", 0) and v.get(t + "+", 0) == v.get(t + "-", 0)


def graph_from_words(words: Iterable[CyclicWord | Sequence[Letter]],
                     gens: tuple[str, str] | None = None) -> DiagramGraph:
    """Edges between consecutive crossings of each cyclic letter sequence.

    A letter ``g`` is entered on side ``g-`` and left on side ``g+`` (the
    reverse for ``g^-1``); consecutive letters ``g, h`` give an edge from the
    exit side of ``g`` to the entry side of ``h``.  Sequences are read as
    given, so unreduced readings may produce loops.
    """
    seqs = [tuple(w.letters) if isinstance(w, CyclicWord) else tuple(w) for w in words]
    if gens is None:
        names = sorted({x.gen for s in seqs for x in s})
        if len(names) > 2:
            raise GraphError(f"graph needs at most two generators, got {names}")
        names += [n for n in ("S", "T") if n not in names][: 2 - len(names)]
        gens = tuple(names)  # type: ignore[assignment]
    s_gen, t_gen = gens
    extra = {x.gen for s in seqs for x in s} - set(gens)
    if extra:
        raise GraphError(f"letters {sorted(extra)} outside the disk pair {list(gens)}")
    vertices = {g + side: 0 for g in gens for side in "+-"}
    ss = tt = mixed = loops = 0
    for seq in seqs:
        n = len(seq)
        for i in range(n):
            g, h = seq[i], seq[(i + 1) % n]
            out_side = g.gen + ("+" if g.sign > 0 else "-")
            in_side = h.gen + ("-" if h.sign > 0 else "+")
            vertices[out_side] += 1
            vertices[in_side] += 1
            if out_side == in_side:
                loops += 1
            elif g.gen != h.gen:
                mixed += 1
            elif g.gen == s_gen:
                ss += 1
            else:
                tt += 1
    return DiagramGraph(ss, tt, mixed, loops, vertices, gens)


def classify_graph_form(g: DiagramGraph) -> GraphForm:
    if g.valences and not g.valence_equations_hold():
        raise GraphError("not realizable as a Heegaard diagram graph: "
                         f"valences {g.valences} violate V(S+)=V(S-), V(T+)=V(T-)")
    if g.loops > 0:
        return GraphForm.C
    if g.ss == 0 or g.tt == 0:
        return GraphForm.B
    return GraphForm.A


def check_unique_minimizer(g: DiagramGraph) -> bool:
    """The cutting disks are the only ones meeting the curves minimally when
    both same-disk edge counts exceed the number of mixed edges."""
    return g.ss > g.mixed > 0 and g.tt > g.mixed > 0
