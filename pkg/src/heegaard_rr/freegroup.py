"""Words and cyclic words in free groups of small rank.

Letters are ``(generator, sign)`` pairs.  The text syntax uses single-letter
generator names with uppercase for the positive letter and lowercase for its
inverse, so ``A^5De^3`` is ``A A A A A D E^-1 E^-1 E^-1``.  Parenthesised
factors may carry a power: ``A^8B^7(A^8B^7A^5B^2A^5B^7)^2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union


class WordError(ValueError):
    pass


class Letter(NamedTuple):
    gen: str
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    def __str__(self) -> str:
        return self.gen.upper() if self.sign > 0 else self.gen.lower()


def letter_key(letter: Letter) -> tuple[str, int]:
    # A < a < B < b < ...
    return (letter.gen, 0 if letter.sign > 0 else 1)


def _letter_from_char(ch: str) -> Letter:
    if not ch.isalpha() or len(ch) != 1:
        raise WordError(f"bad generator symbol {ch!r}")
    return Letter(ch.upper(), 1 if ch.isupper() else -1)


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for x in letters:
        if out and out[-1].gen == x.gen and out[-1].sign == -x.sign:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _syllables(letters: Sequence[Letter]) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    for x in letters:
        if out and out[-1][0] == x.gen and (out[-1][1] > 0) == (x.sign > 0):
            out[-1] = (x.gen, out[-1][1] + x.sign)
        else:
            out.append((x.gen, x.sign))
    return out


def _format_syllables(syls: Sequence[tuple[str, int]]) -> str:
    parts = []
    for g, e in syls:
        ch = g.upper() if e > 0 else g.lower()
        parts.append(ch if abs(e) == 1 else f"{ch}^{abs(e)}")
    return "".join(parts)


def format_letters(letters: Sequence[Letter], fold: bool = True) -> str:
    """Render letters in the power syntax, folding one repeated block if any."""
    if not letters:
        return "1"
    syls = _syllables(letters)
    if fold:
        best = None
        n = len(syls)
        for period in range(1, n // 2 + 1):
            for start in range(0, n - 2 * period + 1):
                block = syls[start:start + period]
                count = 1
                while syls[start + count * period:start + (count + 1) * period] == block:
                    count += 1
                if count >= 2:
                    # prefer the fold that ends the word, then the earliest
                    key = ((count - 1) * period, start + count * period == n, -start)
                    if best is None or key > best[0]:
                        best = (key, start, period, count)
        if best is not None:
            _, start, period, count = best
            head = _format_syllables(syls[:start])
            block = _format_syllables(syls[start:start + period])
            tail = _format_syllables(syls[start + count * period:])
            return f"{head}({block})^{count}{tail}"
    return _format_syllables(syls)


_TOKEN = re.compile(r"\s*(?:([A-Za-z])|(\()|(\))|(\^\s*-?\d+)|(1))")


def parse_letters(text: str) -> list[Letter]:
    """Parse the power syntax into a raw (unreduced) letter list."""
    pos = 0
    stack: list[list[Letter]] = [[]]
    last: list[Letter] | None = None  # operand the next ^n applies to
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordError(f"cannot parse word at {text[pos:]!r}")
        pos = m.end()
        sym, lpar, rpar, power, one = m.groups()
        if sym:
            last = [_letter_from_char(sym)]
            stack[-1].extend(last)
        elif lpar:
            stack.append([])
            last = None
        elif rpar:
            if len(stack) == 1:
                raise WordError("unbalanced ')'")
            last = stack.pop()
            stack[-1].extend(last)
        elif power:
            if last is None:
                raise WordError("power with nothing to apply to")
            n = int(power[1:].strip())
            del stack[-1][len(stack[-1]) - len(last):]
            block = last if n >= 0 else [x.inverse() for x in reversed(last)]
            stack[-1].extend(block * abs(n))
            last = None
        elif one:
            last = None
    if len(stack) != 1:
        raise WordError("unbalanced '('")
    return stack[0]


@dataclass(frozen=True)
class Word:
    """A freely reduced word."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        return cls(tuple(parse_letters(text)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(x.inverse() for x in reversed(self.letters)))

    def generators(self) -> set[str]:
        return {x.gen for x in self.letters}

    def __str__(self) -> str:
        return format_letters(self.letters)


def _least_rotation(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    if not letters:
        return ()
    keys = [letter_key(x) for x in letters]
    n = len(keys)
    best = min(range(n), key=lambda i: keys[i:] + keys[:i])
    return tuple(letters[best:]) + tuple(letters[:best])


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word stored in its least rotation (A < a < B < b ...)."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        w = list(_reduce(self.letters))
        while len(w) >= 2 and w[0].gen == w[-1].gen and w[0].sign == -w[-1].sign:
            w = w[1:-1]
        object.__setattr__(self, "letters", _least_rotation(w))

    @classmethod
    def parse(cls, text: str) -> "CyclicWord":
        return cls(tuple(parse_letters(text)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def inverse(self) -> "CyclicWord":
        return CyclicWord(tuple(x.inverse() for x in reversed(self.letters)))

    def generators(self) -> set[str]:
        return {x.gen for x in self.letters}

    def syllables(self) -> list[tuple[str, int]]:
        """Maximal runs, rotated so no run is split across the seam."""
        letters = self.letters
        if not letters:
            return []
        if len({x.gen for x in letters}) > 1:
            i = 0
            while letters[i].gen == letters[-1].gen:
                i += 1
            letters = letters[i:] + letters[:i]
        return _syllables(letters)

    def __str__(self) -> str:
        return format_letters(self.letters)


AnyWord = Union[Word, CyclicWord]


def free_reduce(letters: Iterable[Letter]) -> Word:
    return Word(tuple(letters))


def cyclic_reduce(w: AnyWord | Iterable[Letter]) -> CyclicWord:
    if isinstance(w, (Word, CyclicWord)):
        return CyclicWord(w.letters)
    return CyclicWord(tuple(w))


def invert(w: AnyWord) -> AnyWord:
    return w.inverse()


def oriented(w: CyclicWord) -> CyclicWord:
    """The lexicographically smaller of ``w`` and its inverse."""
    inv = w.inverse()
    key = lambda c: [letter_key(x) for x in c.letters]
    return w if key(w) <= key(inv) else inv


def total_length(words: Iterable[AnyWord]) -> int:
    return sum(len(w) for w in words)


def word(text: str) -> Word:
    return Word.parse(text)


def cword(text: str) -> CyclicWord:
    return CyclicWord.parse(text)


# -- endomorphisms -----------------------------------------------------------


class SubstitutionError(WordError):
    pass


@dataclass(frozen=True)
class BasisMap:
    """A substitution endomorphism given by per-generator image words."""

    images: tuple[tuple[str, Word], ...]

    @classmethod
    def of(cls, mapping: Mapping[str, Word | str]) -> "BasisMap":
        items = []
        for g, img in mapping.items():
            if isinstance(img, str):
                img = Word.parse(img)
            items.append((g.upper(), img))
        return cls(tuple(sorted(items)))

    @classmethod
    def relabel(cls, mapping: Mapping[str, str]) -> "BasisMap":
        """Relabeling given in letter form, e.g. ``{"E": "A", "a": "B"}``.

        A lowercase key maps the inverse letter, so ``a -> B`` means ``A -> b``.
        """
        out: dict[str, Word] = {}
        for src, dst in mapping.items():
            img = Word.parse(dst)
            if src.islower():
                img = img.inverse()
            g = src.upper()
            if g in out:
                raise SubstitutionError(f"generator {g} mapped twice")
            out[g] = img
        return cls.of(out)

    def as_dict(self) -> dict[str, Word]:
        return dict(self.images)

    def image(self, letter: Letter) -> tuple[Letter, ...]:
        d = self.as_dict()
        if letter.gen not in d:
            raise SubstitutionError(f"generator {letter.gen} is not mapped")
        img = d[letter.gen]
        return img.letters if letter.sign > 0 else img.inverse().letters

    def compose(self, then: "BasisMap") -> "BasisMap":
        """``then`` after ``self``: g -> then(self(g))."""
        return BasisMap.of({g: substitute(img, then) for g, img in self.images})

    def is_signed_permutation(self) -> bool:
        imgs = [img for _, img in self.images]
        if any(len(img) != 1 for img in imgs):
            return False
        return len({img.letters[0].gen for img in imgs}) == len(imgs)

    def __str__(self) -> str:
        return ", ".join(f"{g}->{img}" for g, img in self.images)


def substitute(w: AnyWord, bmap: BasisMap) -> AnyWord:
    d = bmap.as_dict()
    missing = sorted(w.generators() - set(d))
    if missing:
        raise SubstitutionError(f"generator {missing[0]} is not mapped")
    out: list[Letter] = []
    for x in w.letters:
        out.extend(bmap.image(x))
    return type(w)(tuple(out))


# -- Whitehead moves in rank two ---------------------------------------------


@dataclass(frozen=True)
class WhiteheadMove:
    """One of (A,B) -> (A B^s, B) or (A,B) -> (A, B A^s) on an ordered pair.

    ``target`` is the index (0 or 1) of the generator that gets multiplied,
    ``sign`` the exponent of the multiplier.
    """

    target: int
    sign: int
    gens: tuple[str, str] = ("A", "B")

    def as_map(self) -> BasisMap:
        a, b = self.gens
        t, o = (a, b) if self.target == 0 else (b, a)
        mult = Letter(o, self.sign)
        return BasisMap.of({t: Word((Letter(t, 1), mult)), o: Word((Letter(o, 1),))})

    def inverse(self) -> "WhiteheadMove":
        return WhiteheadMove(self.target, -self.sign, self.gens)

    def __str__(self) -> str:
        a, b = self.gens
        if self.target == 0:
            return f"({a},{b})->({a}{Letter(b, self.sign)},{b})"
        return f"({a},{b})->({a},{b}{Letter(a, self.sign)})"


def whitehead_moves(gens: tuple[str, str] = ("A", "B")) -> list[WhiteheadMove]:
    return [WhiteheadMove(t, s, gens) for t in (0, 1) for s in (1, -1)]


def signed_permutations(gens: tuple[str, str] = ("A", "B")) -> list[BasisMap]:
    a, b = gens
    out = []
    for x, y in ((a, b), (b, a)):
        for sx in (1, -1):
            for sy in (1, -1):
                out.append(BasisMap.of({a: Word((Letter(x, sx),)), b: Word((Letter(y, sy),))}))
    return out


def apply_whitehead(w: CyclicWord, move: WhiteheadMove) -> CyclicWord:
    return substitute(w, move.as_map())


def rank2_gens(words: Iterable[AnyWord], default: tuple[str, str] = ("A", "B")) -> tuple[str, str]:
    gens = set()
    for w in words:
        gens |= w.generators()
    if len(gens) > 2:
        raise WordError(f"expected at most two generators, got {sorted(gens)}")
    filled = sorted(gens)
    for g in default:
        if len(filled) == 2:
            break
        if g not in filled:
            filled.append(g)
    if len(filled) < 2:
        filled.append(next(c for c in "ABCDEFGHIJKLMNOPQRSTUVWXYZ" if c not in filled))
    return tuple(sorted(filled))  # type: ignore[return-value]


def whitehead_reduce(words: Sequence[CyclicWord], gens: tuple[str, str] | None = None
                     ) -> tuple[list[CyclicWord], list[WhiteheadMove]]:
    """Greedy descent: apply the most-reducing of the four moves until none reduces."""
    gens = gens or rank2_gens(words)
    current = list(words)
    trace: list[WhiteheadMove] = []
    length = total_length(current)
    while True:
        best = None
        for m in whitehead_moves(gens):
            img = [apply_whitehead(w, m) for w in current]
            n = total_length(img)
            if n < length and (best is None or n < best[0]):
                best = (n, m, img)
        if best is None:
            return current, trace
        length, m, current = best
        trace.append(m)


def minimal_orbit(words: Sequence[CyclicWord], gens: tuple[str, str] | None = None,
                  cap: int = 100_000) -> set[tuple[CyclicWord, ...]]:
    """All images of an already minimal tuple under length-preserving moves and
    signed relabelings, found by breadth-first search."""
    gens = gens or rank2_gens(words)
    start = tuple(words)
    length = total_length(start)
    maps = [m.as_map() for m in whitehead_moves(gens)] + signed_permutations(gens)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for ws in frontier:
            for bm in maps:
                img = tuple(substitute(w, bm) for w in ws)
                if total_length(img) != length or img in seen:
                    continue
                seen.add(img)
                if len(seen) > cap:
                    raise OverflowError(f"orbit exceeds {cap} elements")
                nxt.append(img)
        frontier = nxt
    return seen


def is_primitive(w: CyclicWord) -> tuple[bool, list[WhiteheadMove]]:
    """True (with the reducing trace) iff ``w`` is conjugate to a basis element."""
    if not w:
        return False, []
    reduced, trace = whitehead_reduce([w])
    if len(reduced[0]) == 1:
        return True, trace
    return False, []


def proper_power_root(w: CyclicWord) -> tuple[str, int] | None:
    """``(g, n)`` if ``w`` is an automorphic image of ``g^n`` with n >= 2."""
    if not w:
        return None
    (m,), _ = whitehead_reduce([w])
    gens = m.generators()
    if len(gens) == 1 and len(m) >= 2:
        return next(iter(gens)), len(m)
    return None


def two_syllable_form(w: CyclicWord) -> tuple[int, int] | None:
    """Exponents (p, q) if some minimal-orbit image of ``w`` is g1^p g2^q."""
    if len(w.generators()) == 0:
        return None
    (m,), _ = whitehead_reduce([w])
    for (img,) in [(m,)] + sorted(minimal_orbit([m]), key=str):
        syl = img.syllables()
        if len(syl) == 2 and syl[0][0] != syl[1][0]:
            return syl[0][1], syl[1][1]
    return None


def christoffel_word(c_count: int, d_count: int, c_sym: str = "C", d_sym: str = "D") -> CyclicWord:
    """Balanced cyclic interleaving of ``c_count`` c-letters and ``d_count`` d-letters.

    This is the cutting sequence of the simple closed curve that meets two
    basis curves of a torus ``c_count`` and ``d_count`` times.
    """
    if c_count <= 0 or d_count <= 0:
        raise WordError("counts must be positive")
    if gcd(c_count, d_count) != 1:
        raise WordError(f"counts {c_count}, {d_count} are not coprime")
    n = c_count + d_count
    c, d = Letter(c_sym.upper(), 1), Letter(d_sym.upper(), 1)
    seq = [d if ((i + 1) * d_count) // n - (i * d_count) // n else c for i in range(n)]
    k = seq.index(d)
    return CyclicWord(tuple(seq[k:] + seq[:k]))
