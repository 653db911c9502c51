"""Distance certificates for genus-two splittings given as R-R diagrams.

A rectangle certificate bounds the distance below by 3; a disjoint
(SF, PP) / (PP, SF) pair of marked curves bounds it above by 3.  Two
diagrams whose cutting disks are unique minimizers on both sides are
distinguished by their complexities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Mapping, Optional, Union

from .freegroup import CyclicWord, minimal_orbit, proper_power_root, two_syllable_form, whitehead_reduce
from .rrdiagram.geometry import FAMILY_TAGS, detect_rectangles, dual_words
from .rrdiagram.graph import GraphError, classify_graph_form, check_unique_minimizer, graph_from_words
from .rrdiagram.model import RRDiagram, complexity, content_hash


class CertificateError(ValueError):
    pass


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- SUMS ----------------------------------------------------------------------


@dataclass(frozen=True)
class SumsCertificate:
    witnesses: tuple[tuple[str, int, int], ...]  # (family, m, n) with m - 1 > n > 1
    diagram_hash: str

    def __post_init__(self):
        for tag, m, n in self.witnesses:
            if not m - 1 > n > 1:
                raise CertificateError(f"family {tag}: ({m}, {n}) violates m-1 > n > 1")
        if tuple(t for t, _, _ in self.witnesses) != FAMILY_TAGS:
            raise CertificateError("certificate needs one witness per family ax, ay, bx, by")

    def to_json(self) -> dict:
        return {"kind": "sums", "diagram_hash": self.diagram_hash,
                "witnesses": {t: [m, n] for t, m, n in self.witnesses}}


@dataclass(frozen=True)
class NoCertificate:
    reason: str

    def __bool__(self) -> bool:
        return False

    def to_json(self) -> dict:
        return {"kind": "none", "reason": self.reason}


def _family_witness(values: tuple[int, ...]) -> tuple[int, int] | None:
    if not values:
        return None
    m = max(values)
    ns = [n for n in values if m - 1 > n > 1]
    return (m, min(ns)) if ns else None


def certify_sums(d: RRDiagram) -> Union[SumsCertificate, NoCertificate]:
    """Look for rectangle weights m - 1 > n > 1 in each of the four families."""
    fams = detect_rectangles(d)
    wits = []
    for tag in FAMILY_TAGS:
        vals = fams[tag].values
        if not vals:
            return NoCertificate(f"family {tag} empty")
        w = _family_witness(vals)
        if w is None:
            return NoCertificate(f"family {tag} has no weights m, n with m-1 > n > 1 (weights {list(vals)})")
        wits.append((tag, *w))
    return SumsCertificate(tuple(wits), content_hash(d))


# -- Seifert-fiber and proper-power words ----------------------------------------


@dataclass(frozen=True)
class SFDeclaration:
    """Declared SF normal form: ``16a`` is g1^p g2^q with |p|, |q| >= 2;
    ``16b`` carries witness parameters (a, b) and the pattern word it claims."""

    form: str = "16a"
    a: int = 0
    b: int = 0
    pattern: Optional[CyclicWord] = None

    def to_json(self) -> dict:
        out = {"form": self.form}
        if self.form == "16b":
            out.update(a=self.a, b=self.b, pattern=str(self.pattern))
        return out


def is_seifert_fiber_word(w: CyclicWord, declared: Union[str, SFDeclaration] = "16a") -> bool:
    decl = SFDeclaration(declared) if isinstance(declared, str) else declared
    if decl.form == "16a":
        pq = two_syllable_form(w)
        return pq is not None and abs(pq[0]) >= 2 and abs(pq[1]) >= 2
    if decl.form == "16b":
        if decl.pattern is None or decl.a <= 0 or decl.b <= 0 or gcd(decl.a, decl.b) != 1:
            return False
        if len(decl.pattern.generators()) != 2 or not w:
            return False
        (m,), _ = whitehead_reduce([w])
        (pm,), _ = whitehead_reduce([decl.pattern])
        if len(m) != len(pm):
            return False
        orbit = {img for (img,) in minimal_orbit([m])}
        return pm in orbit or pm.inverse() in orbit
    raise CertificateError(f"unknown SF form {decl.form!r}")


def is_proper_power_word(w: CyclicWord) -> bool:
    return proper_power_root(w) is not None


# -- (SF, PP) pair witnesses -------------------------------------------------------


@dataclass(frozen=True)
class PairWitness:
    alpha: str
    beta: str
    alpha_word_h: CyclicWord
    beta_word_h: CyclicWord
    alpha_word_hp: CyclicWord
    beta_word_hp: CyclicWord
    sf_forms: tuple[tuple[str, SFDeclaration], ...]
    diagram_hash: str

    def to_json(self) -> dict:
        return {
            "kind": "pair",
            "diagram_hash": self.diagram_hash,
            "alpha": {"id": self.alpha, "h": str(self.alpha_word_h), "hprime": str(self.alpha_word_hp),
                      "roles": ["SF in H", "PP in H'"]},
            "beta": {"id": self.beta, "h": str(self.beta_word_h), "hprime": str(self.beta_word_hp),
                     "roles": ["PP in H", "SF in H'"]},
            "sf_forms": {k: v.to_json() for k, v in self.sf_forms},
        }


@dataclass(frozen=True)
class Failure:
    reason: str

    def __bool__(self) -> bool:
        return False

    def to_json(self) -> dict:
        return {"kind": "failure", "reason": self.reason}


def _disjoint_classes(u: CyclicWord, v: CyclicWord) -> str | None:
    """If one word is a pure power P^e of a handle generator, every P-syllable of
    the other must cross that handle in the same class (|exponent| = |e|)."""
    for x, y in ((u, v), (v, u)):
        syl = x.syllables()
        if len(syl) != 1:
            continue
        g, e = syl[0]
        bad = [f for h, f in y.syllables() if h == g and abs(f) != abs(e)]
        if bad:
            return f"{g}^{abs(e)} meets {g}^{abs(bad[0])}"
    return None


def verify_pair_witness(d: RRDiagram, alpha: str, beta: str,
                        sf_forms: Mapping[str, SFDeclaration] | None = None
                        ) -> Union[PairWitness, Failure]:
    ids = {m.id for m in d.marked_curves}
    for cid in (alpha, beta):
        if cid not in ids:
            raise KeyError(f"no marked curve {cid!r}")
    forms = dict(sf_forms or {})
    a, b = d.marked(alpha), d.marked(beta)
    fa, fb = forms.get(alpha, SFDeclaration()), forms.get(beta, SFDeclaration())
    checks = [
        (is_proper_power_word(b.word_h), f"{beta} not PP in H"),
        (is_seifert_fiber_word(a.word_h, fa), f"{alpha} not SF in H"),
        (is_proper_power_word(a.word_hprime), f"{alpha} not PP in H'"),
        (is_seifert_fiber_word(b.word_hprime, fb), f"{beta} not SF in H'"),
    ]
    for ok, msg in checks:
        if not ok:
            return Failure(msg)
    for side, u, v in (("H", a.word_h, b.word_h), ("H'", a.word_hprime, b.word_hprime)):
        clash = _disjoint_classes(u, v)
        if clash:
            return Failure(f"{alpha} and {beta} not disjoint in {side}: {clash}")
    return PairWitness(alpha, beta, a.word_h, b.word_h, a.word_hprime, b.word_hprime,
                       ((alpha, fa), (beta, fb)), content_hash(d))


# -- distance bracket ----------------------------------------------------------------


@dataclass(frozen=True)
class DistanceBracket:
    lower: int
    upper: Optional[int]
    evidence: tuple[str, ...] = ()

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise CertificateError(f"empty bracket [{self.lower}, {self.upper}]")

    def exact(self) -> Optional[int]:
        return self.lower if self.upper == self.lower else None

    def __str__(self) -> str:
        return f"[{self.lower}, {self.upper}]" if self.upper is not None else f"[{self.lower}, inf)"

    def to_json(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "evidence": list(self.evidence)}


def distance_bracket(d: RRDiagram, sums: Optional[SumsCertificate] = None,
                     pair: Optional[PairWitness] = None) -> DistanceBracket:
    """Bounds supported by the given certificates; no certificate, no claim."""
    h = content_hash(d)
    evidence = []
    lower, upper = 0, None
    if sums:
        if sums.diagram_hash != h:
            raise CertificateError("SUMS certificate was issued for a different diagram")
        lower = 3
        evidence.append(f"sums:{h[:12]}")
    if pair:
        if pair.diagram_hash != h:
            raise CertificateError("pair witness was issued for a different diagram")
        upper = 3
        evidence.append(f"pair:{pair.alpha},{pair.beta}:{h[:12]}")
    return DistanceBracket(lower, upper, tuple(evidence))


# -- comparison ------------------------------------------------------------------------


@dataclass(frozen=True)
class SplittingSummary:
    diagram_hash: str
    complexity: int
    sums: bool
    graph_form: str
    ss: int
    tt: int
    mixed: int
    unique_minimizer: bool
    note: str = ""

    def to_json(self) -> dict:
        return {"diagram_hash": self.diagram_hash, "complexity": self.complexity, "sums": self.sums,
                "dual_graph": {"form": self.graph_form, "ss": self.ss, "tt": self.tt, "mixed": self.mixed},
                "unique_minimizer": self.unique_minimizer, "note": self.note}


@dataclass(frozen=True)
class ComparisonReport:
    first: SplittingSummary
    second: SplittingSummary
    verdict: str  # NotHomeomorphic | Inconclusive
    reason: str = field(default="")

    def to_json(self) -> dict:
        return {"first": self.first.to_json(), "second": self.second.to_json(),
                "verdict": self.verdict, "reason": self.reason}


def summarize(d: RRDiagram) -> SplittingSummary:
    sums = certify_sums(d)
    try:
        g = graph_from_words(dual_words(d).values(), gens=("X", "Y"))
        form = classify_graph_form(g).value
        counts, note = (g.ss, g.tt, g.mixed), ""
    except GraphError as exc:
        g, form, counts, note = None, "invalid", (0, 0, 0), str(exc)
    uniq = g is not None and form == "FormA" and check_unique_minimizer(g)
    return SplittingSummary(content_hash(d), complexity(d), bool(sums), form,
                            *counts, uniq, note or getattr(sums, "reason", ""))


def compare_splittings(d1: RRDiagram, d2: RRDiagram) -> ComparisonReport:
    s1, s2 = summarize(d1), summarize(d2)
    if not (s1.sums and s2.sums):
        return ComparisonReport(s1, s2, "Inconclusive", "a diagram lacks a SUMS certificate")
    if not (s1.unique_minimizer and s2.unique_minimizer):
        return ComparisonReport(s1, s2, "Inconclusive", "a dual graph fails the unique-minimizer test")
    if s1.complexity == s2.complexity:
        return ComparisonReport(s1, s2, "Inconclusive", "minimal complexities agree")
    return ComparisonReport(s1, s2, "NotHomeomorphic",
                            f"minimal complexities differ ({s1.complexity} != {s2.complexity})")


# -- disjoint-curve falsification harness ------------------------------------------------


@dataclass(frozen=True)
class DcpCandidate:
    hexagon: str
    direction: tuple[int, int]
    word_hprime: CyclicWord


def dcp_search(d: RRDiagram, seed: int = 0, trials: int = 200, max_coord: int = 6) -> list[DcpCandidate]:
    """Sample closed curves inside one handle (so disjoint from the other
    handle's cutting disk) and report any whose H'-reading misses a letter or
    has a graph without both same-disk edge types, i.e. curves that could be
    disjoint from a disk of H' as well.  Empty output is the expected result
    for a certified diagram; this is a falsification test, not a proof."""
    import random
    from math import gcd as _gcd

    from .rrdiagram.geometry import handle_crossings

    rng = random.Random(seed)
    bad = []
    seen = set()
    for _ in range(trials):
        hexagon = rng.choice(("A", "B"))
        u = (rng.randint(-max_coord, max_coord), rng.randint(0, max_coord))
        if u == (0, 0) or _gcd(*u) != 1 or (hexagon, u) in seen:
            continue
        seen.add((hexagon, u))
        if not any(d.hexagon(hexagon).slots):
            continue
        w = CyclicWord(tuple(handle_crossings(d, hexagon, u)))
        g = graph_from_words([w], gens=("X", "Y"))
        if len(w.generators()) < 2 or g.ss == 0 or g.tt == 0:
            bad.append(DcpCandidate(hexagon, u, w))
    return bad
