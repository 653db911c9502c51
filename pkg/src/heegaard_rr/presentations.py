"""Finite presentations, Tietze elimination chains and syllable statistics."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence, Union

from .freegroup import (
    BasisMap,
    CyclicWord,
    Letter,
    Word,
    WordError,
    minimal_orbit,
    oriented,
    substitute,
    total_length,
    whitehead_moves,
    whitehead_reduce,
    apply_whitehead,
)


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[CyclicWord, ...]

    def __post_init__(self):
        gens = tuple(g.upper() for g in self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError(f"repeated generator in {gens}")
        rels = tuple(r if isinstance(r, CyclicWord) else CyclicWord(tuple(r)) for r in self.relators)
        for i, r in enumerate(rels):
            extra = r.generators() - set(gens)
            if extra:
                raise PresentationError(f"relator {i} uses undeclared generator {sorted(extra)[0]}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        m = re.fullmatch(r"\s*<\s*([^|]*?)\s*\|\s*(.*?)\s*>\s*", text, re.S)
        if not m:
            raise PresentationError(f"not a presentation: {text!r}")
        gens = [g.strip() for g in m.group(1).split(",") if g.strip()]
        for g in gens:
            if len(g) != 1 or not g.isalpha():
                raise PresentationError(f"bad generator name {g!r}")
        body = m.group(2)
        rels = [r for r in _split_top_level(body) if r.strip()]
        try:
            return cls(tuple(gens), tuple(CyclicWord.parse(r) for r in rels))
        except WordError as exc:
            raise PresentationError(str(exc)) from exc

    def __str__(self) -> str:
        return f"<{','.join(self.generators)} | {', '.join(str(r) for r in self.relators)}>"

    def total_length(self) -> int:
        return total_length(self.relators)

    def canonical(self) -> tuple[CyclicWord, ...]:
        """Relators up to order and inversion, for orbit bookkeeping."""
        return tuple(sorted((oriented(r) for r in self.relators), key=str))


def _split_top_level(body: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def presentation(text: str) -> Presentation:
    return Presentation.parse(text)


# -- Tietze steps ------------------------------------------------------------


@dataclass(frozen=True)
class EliminateGenerator:
    relator: int
    generator: str
    solved: Word | None = None  # filled in when the step is applied

    def __str__(self) -> str:
        sol = f" ({self.generator} = {self.solved})" if self.solved is not None else ""
        return f"eliminate {self.generator} via relator {self.relator}{sol}"


@dataclass(frozen=True)
class Rename:
    bmap: BasisMap

    def __str__(self) -> str:
        return f"rename {self.bmap}"


@dataclass(frozen=True)
class InvertRelator:
    relator: int

    def __str__(self) -> str:
        return f"invert relator {self.relator}"


@dataclass(frozen=True)
class PermuteRelators:
    order: tuple[int, ...]

    def __str__(self) -> str:
        return f"reorder relators {list(self.order)}"


TietzeStep = Union[EliminateGenerator, Rename, InvertRelator, PermuteRelators]


@dataclass
class TietzeTrace:
    initial: Presentation
    steps: list[TietzeStep] = field(default_factory=list)

    def replay(self) -> Presentation:
        p = self.initial
        for step in self.steps:
            p, _ = apply_step(p, step)
        return p


def eliminate_generator(p: Presentation, relator_index: int, g: str
                        ) -> tuple[Presentation, EliminateGenerator]:
    """Solve relator ``relator_index`` for ``g`` and substitute it everywhere else."""
    g = g.upper()
    if g not in p.generators:
        raise PresentationError(f"generator {g} not in presentation")
    if not 0 <= relator_index < len(p.relators):
        raise PresentationError(f"no relator {relator_index}")
    rel = p.relators[relator_index].letters
    hits = [i for i, x in enumerate(rel) if x.gen == g]
    if len(hits) != 1:
        raise PresentationError(
            f"{g} occurs {len(hits)} times in relator {relator_index}; need exactly once")
    i = hits[0]
    sign = rel[i].sign
    rest = Word(rel[i + 1:] + rel[:i])  # relator = g^sign . rest
    solved = rest.inverse() if sign > 0 else rest
    images = {h: Word((Letter(h, 1),)) for h in p.generators if h != g}
    images[g] = solved
    bmap = BasisMap.of(images)
    rels = tuple(substitute(r, bmap) for j, r in enumerate(p.relators) if j != relator_index)
    gens = tuple(h for h in p.generators if h != g)
    return Presentation(gens, rels), EliminateGenerator(relator_index, g, solved)


def rename(p: Presentation, bmap: BasisMap) -> Presentation:
    d = bmap.as_dict()
    if set(d) != set(p.generators) or not bmap.is_signed_permutation():
        raise PresentationError("rename needs a bijective relabeling of the generators")
    gens = tuple(sorted(d[g].letters[0].gen for g in p.generators))
    return Presentation(gens, tuple(substitute(r, bmap) for r in p.relators))


def invert_relator(p: Presentation, index: int) -> Presentation:
    rels = list(p.relators)
    rels[index] = rels[index].inverse()
    return Presentation(p.generators, tuple(rels))


def permute_relators(p: Presentation, order: Sequence[int]) -> Presentation:
    if sorted(order) != list(range(len(p.relators))):
        raise PresentationError(f"{list(order)} is not a permutation of the relators")
    return Presentation(p.generators, tuple(p.relators[i] for i in order))


def apply_step(p: Presentation, step: TietzeStep) -> tuple[Presentation, TietzeStep]:
    if isinstance(step, EliminateGenerator):
        return eliminate_generator(p, step.relator, step.generator)
    if isinstance(step, Rename):
        return rename(p, step.bmap), step
    if isinstance(step, InvertRelator):
        return invert_relator(p, step.relator), step
    if isinstance(step, PermuteRelators):
        return permute_relators(p, step.order), step
    raise TypeError(f"unknown step {step!r}")


# -- Whitehead minimisation --------------------------------------------------


def _pair(p: Presentation) -> tuple[str, str]:
    if len(p.generators) != 2:
        raise PresentationError(f"need exactly 2 generators, got {len(p.generators)}")
    return p.generators  # type: ignore[return-value]


def whitehead_minimize(p: Presentation):
    gens = _pair(p)
    rels, trace = whitehead_reduce(list(p.relators), gens)
    return Presentation(gens, tuple(rels)), trace


def is_whitehead_minimal(p: Presentation) -> bool:
    gens = _pair(p)
    n = p.total_length()
    return all(total_length(apply_whitehead(r, m) for r in p.relators) >= n
               for m in whitehead_moves(gens))


def minimal_basis_orbit(p: Presentation, cap: int = 100_000) -> set[Presentation]:
    """Images of a minimal presentation under length-preserving moves and relabelings.

    The result is the closure under the explored moves; it is evidence about
    the minimising basis, not a proof of uniqueness.
    """
    gens = _pair(p)
    return {Presentation(gens, rels) for rels in minimal_orbit(list(p.relators), gens, cap)}


# -- syllable statistics -----------------------------------------------------


@dataclass
class SyllableStats:
    generators: tuple[str, str]
    # generator -> {|exponent|: count}
    magnitudes: dict[str, Counter]
    # (m, n) -> number of subwords A^m B^n or (A^m B^n)^-1 across the relators
    pairs: Counter

    def count(self, gen: str, e: int) -> int:
        return self.magnitudes[gen].get(abs(e), 0)

    def pair_count(self, m: int, n: int) -> int:
        return self.pairs.get((m, n), 0)


def syllable_stats(p: Presentation) -> SyllableStats:
    a, b = _pair(p)
    mags = {a: Counter(), b: Counter()}
    pairs: Counter = Counter()
    for i, r in enumerate(p.relators):
        syl = r.syllables()
        if len(syl) < 2:
            raise PresentationError(f"relator {i} is a power of one generator")
        for j, (g, e) in enumerate(syl):
            mags[g][abs(e)] += 1
            h, f = syl[(j + 1) % len(syl)]
            if g == a:
                pairs[(e, f)] += 1
            else:
                # B^f A^e = (A^-e B^-f)^-1
                pairs[(-f, -e)] += 1
    return SyllableStats((a, b), mags, pairs)


class NotRealizable(PresentationError):
    pass


def exponent_triples(stats: SyllableStats) -> dict[str, tuple[int, int, int]]:
    """Per generator the label triple (e1, e2, e3) with e2 = e1 + e3 and e1 >= e3."""
    out = {}
    for g in stats.generators:
        mags = sorted(stats.magnitudes[g])
        msg = f"generator {g} exponents {mags}: not R-R-realizable with Γ-avoiding cutting disks"
        if len(mags) == 3:
            lo, mid, hi = mags
            if lo + mid != hi:
                raise NotRealizable(msg)
            e1, e2, e3 = mid, hi, lo
        elif len(mags) == 2:
            lo, hi = mags
            e1, e2, e3 = max(lo, hi - lo), hi, min(lo, hi - lo)
        elif mags == [1]:
            e1, e2, e3 = 1, 1, 0
        else:
            raise NotRealizable(msg)
        if gcd(e1, e3) != 1:
            raise NotRealizable(msg)
        out[g] = (e1, e2, e3)
    return out


# -- abelianisation ----------------------------------------------------------


def relation_matrix(p: Presentation) -> list[list[int]]:
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for x in r.letters:
            row[p.generators.index(x.gen)] += x.sign
        rows.append(row)
    return rows


def abelian_invariants(p: Presentation) -> tuple[tuple[int, ...], int]:
    """Torsion coefficients (> 1) and free rank of the abelianisation."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import invariant_factors

    n = len(p.generators)
    rows = relation_matrix(p)
    if not rows or n == 0:
        return (), n
    factors = [abs(int(d)) for d in invariant_factors(Matrix(rows), domain=ZZ)]
    nonzero = [d for d in factors if d != 0]
    return tuple(sorted(d for d in nonzero if d != 1)), n - len(nonzero)
