"""Independent oracles used to freeze expected values.

None of these call the package's reduction, minimisation or normal-form code
paths they are checking; they work on plain strings and integer matrices.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd

INV = str.swapcase


def reduce_str(w: str) -> str:
    out: list[str] = []
    for ch in w:
        if out and out[-1] == INV(ch):
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def cyclic_reduce_str(w: str) -> str:
    w = reduce_str(w)
    while len(w) >= 2 and w[0] == INV(w[-1]):
        w = w[1:-1]
    return w


_ALPHA = "AaBbCcDdEeXxYy"
_TO_KEY = str.maketrans(_ALPHA, "abcdefghijklmn")
_FROM_KEY = str.maketrans("abcdefghijklmn", _ALPHA)


def canon_str(w: str) -> str:
    """Least rotation under A < a < B < b < ..."""
    w = cyclic_reduce_str(w)
    if not w:
        return w
    k = w.translate(_TO_KEY)
    kk = k + k
    n = len(k)
    return min(kk[i:i + n] for i in range(n)).translate(_FROM_KEY)


def expand(text: str) -> str:
    """Tiny independent parser: letters, ^n, ^-n, parenthesised groups."""
    def group(i):
        out = ""
        while i < len(text) and text[i] != ")":
            if text[i] == "(":
                inner, i = group(i + 1)
                i += 1
                piece = inner
            else:
                piece = text[i]
                i += 1
            if i < len(text) and text[i] == "^":
                j = i + 1
                while j < len(text) and (text[j].isdigit() or text[j] == "-"):
                    j += 1
                n = int(text[i + 1:j])
                piece = piece * n if n >= 0 else "".join(INV(c) for c in reversed(piece)) * (-n)
                i = j
            out += piece
        return out, i
    return group(0)[0]


def substitute_str(w: str, images: dict[str, str]) -> str:
    out = []
    for ch in w:
        if ch.isupper():
            out.append(images.get(ch, ch))
        else:
            img = images.get(ch.upper(), ch.upper())
            out.append("".join(INV(c) for c in reversed(img)))
    return reduce_str("".join(out))


WH = [{"A": "AB"}, {"A": "Ab"}, {"B": "BA"}, {"B": "Ba"}]
PERMS = [dict(zip("AB", p)) for p in product(["A", "a", "B", "b"], repeat=2)
         if {p[0].upper(), p[1].upper()} == {"A", "B"}]


def primitive_classes(depth: int = 8, max_len: int = 40) -> set[str]:
    """Cyclic classes of images of A, a, B, b under up to ``depth`` Whitehead moves."""
    start = {canon_str(g) for g in "AaBb"}
    seen = set(start)
    frontier = set(start)
    for _ in range(depth):
        nxt = set()
        for w in frontier:
            for m in WH + PERMS:
                v = canon_str(substitute_str(w, m))
                if len(v) <= max_len and v not in seen:
                    seen.add(v)
                    nxt.add(v)
        frontier = nxt
    return seen


def all_cyclic_words(max_len: int, letters: str = "AaBb") -> set[str]:
    out = set()
    for n in range(1, max_len + 1):
        for t in product(letters, repeat=n):
            w = "".join(t)
            if cyclic_reduce_str(w) == w:
                out.add(canon_str(w))
    return out


def automorphic_images(words: tuple[str, ...], depth: int) -> dict[tuple[str, ...], int]:
    """Canonical tuples reachable by <= depth Whitehead moves, then a signed permutation."""
    seen = {words}
    frontier = [words]
    for _ in range(depth):
        nxt = []
        for ws in frontier:
            for m in WH:
                img = tuple(canon_str(substitute_str(w, m)) for w in ws)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    out = {}
    for ws in seen:
        for p in PERMS:
            img = tuple(canon_str(substitute_str(w, p)) for w in ws)
            out[img] = sum(map(len, img))
    return out


def graph_counts_by_syllables(words: list[str]) -> tuple[int, int, int]:
    """(ss, tt, mixed) for syllable-alternating words over A/B: e-1 same-letter
    adjacencies per syllable of exponent e, one mixed edge per syllable boundary."""
    ss = tt = mixed = 0
    for w in words:
        w = canon_str(w)
        n = len(w)
        k = next(i for i in range(n) if w[i].upper() != w[i - 1].upper())
        w = w[k:] + w[:k]
        runs = []
        for ch in w:
            if runs and runs[-1][0] == ch:
                runs[-1][1] += 1
            else:
                runs.append([ch, 1])
        for ch, e in runs:
            if ch.upper() == "A":
                ss += e - 1
            else:
                tt += e - 1
        mixed += len(runs)
    return ss, tt, mixed


def determinantal_invariants(rows: list[list[int]], ncols: int) -> tuple[tuple[int, ...], int]:
    """Torsion (>1) and free rank from gcds of k x k minors."""
    def det(m):
        if len(m) == 1:
            return m[0][0]
        return sum((-1) ** j * m[0][j] * det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))
    ds = [1]
    for k in range(1, min(len(rows), ncols) + 1):
        g = 0
        for ri in combinations(range(len(rows)), k):
            for ci in combinations(range(ncols), k):
                g = gcd(g, det([[rows[r][c] for c in ci] for r in ri]))
        if g == 0:
            break
        ds.append(g)
    factors = [ds[i] // ds[i - 1] for i in range(1, len(ds))]
    return tuple(f for f in factors if f > 1), ncols - len(factors)


def christoffel_cutting_sequence(p: int, q: int) -> str:
    """Cutting sequence of the line y = (q/p) x on the torus, read as 'C' for a
    vertical grid line and 'D' for a horizontal one (generic offset)."""
    eps = Fraction(1, 4 * (p + q) ** 2)
    events = []
    for k in range(1, p + 1):
        events.append((Fraction(k) - eps, "C"))
    for k in range(1, q + 1):
        events.append((Fraction(k * p, q) - eps, "D"))
    return "".join(c for _, c in sorted(events))
