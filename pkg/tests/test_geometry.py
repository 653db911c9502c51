import random
from collections import Counter

import pytest

from heegaard_rr.freegroup import CyclicWord, cword, signed_permutations, substitute
from heegaard_rr.presentations import Presentation, abelian_invariants
from heegaard_rr.rrdiagram import complexity, curve_words, diagram_from_hookup, extract_words
from heegaard_rr.rrdiagram.geometry import (
    _edge_crossings,
    class_direction,
    detect_rectangles,
    dual_words,
    handle_crossings,
    handle_curve_word,
    raw_dual_letters,
    slope_curve_word,
)

from helpers import random_diagram


def equivalent(w: CyclicWord, text: str) -> bool:
    t = cword(text)
    return any(w in (substitute(t, m), substitute(t, m).inverse()) for m in signed_permutations(("X", "Y")))


def letter_counts(w: CyclicWord) -> Counter:
    return Counter(x.gen for x in w.letters)


def weighted_crossings(d, hexagon: str) -> Counter:
    """Curve crossings of the disk boundary predicted from face data: |label| per connection."""
    h = d.hexagon(hexagon)
    out = Counter()
    for f in range(3):
        for c in h.slots[f]:
            out[c] += abs(h.labels[f])
    return out


@pytest.mark.parametrize("u,expected", [((1, 0), [2, 1]), ((0, 1), [0, 1]), ((1, 1), [2, 0]),
                                        ((2, 1), None), ((1, -1), None)])
def test_edge_crossings_counts(u, expected):
    seq = _edge_crossings(u)
    ux, uy = u
    assert Counter(seq) == Counter({0: abs(uy), 1: abs(uy - ux), 2: abs(ux)}) - Counter()
    if expected is not None:
        assert sorted(seq) == sorted(expected)


def test_dual_letter_counts_match_face_data(fig9a, fig9b):
    for d in (fig9a, fig9b):
        for h, w in raw_dual_letters(d).items():
            assert Counter(x.gen for x in w) == weighted_crossings(d, h)


def test_dual_total_length_is_complexity(fig9a, fig9b):
    for d, n in ((fig9a, 121), (fig9b, 149)):
        assert sum(len(w) for w in dual_words(d).values()) == n


def test_dual_presentation_same_homology(fig9a, fig9b):
    for d in (fig9a, fig9b):
        dw = dual_words(d)
        assert abelian_invariants(Presentation(("X", "Y"), (dw["A"], dw["B"]))) == ((799,), 0)


def test_dual_algebraic_intersections(fig9b):
    # exponent sum of curve C in the dual word of handle P equals the
    # exponent sum of P in C's relator, up to one global sign per handle
    rel = curve_words(fig9b)
    for h, w in dual_words(fig9b).items():
        for c in ("X", "Y"):
            dual_sum = sum(x.sign for x in w.letters if x.gen == c)
            rel_sum = sum(x.sign for x in rel[c].letters if x.gen == h)
            assert abs(dual_sum) == abs(rel_sum)


def test_toy_single_strand_dual():
    labels = (1, 1, 0, -1, -1, 0)
    d = diagram_from_hookup(labels, labels, [1, 0, 0, 1, 0, 0], [1, 0, 0, 1, 0, 0], 0, ["X"])
    dw = dual_words(d)
    assert str(dw["A"]) in ("X", "x")
    assert extract_words(d).relators[0] in (cword("AB"), cword("Ab"), cword("aB"), cword("ab"))


def test_fig9b_beta_handle_curve(fig9b):
    assert handle_curve_word(fig9b, "B", 7) == cword("X^2Y^7")


def test_fig9a_beta_handle_curves(fig9a):
    assert equivalent(handle_curve_word(fig9a, "B", 5), "Y^5x^3Y^2")
    assert equivalent(handle_curve_word(fig9a, "B", 2), "x^5y^3")


def test_handle_curve_reads_declared_class(fig9b):
    h = fig9b.hex_b
    for lab in (7, 9, 2, -7):
        hw, _ = slope_curve_word(fig9b, "B", class_direction(h, lab))
        assert hw == cword(f"B^{lab}")


def test_class_direction_unknown_label(fig9b):
    with pytest.raises(ValueError):
        class_direction(fig9b.hex_a, 4)


def test_non_primitive_direction_rejected(fig9b):
    with pytest.raises(ValueError):
        handle_crossings(fig9b, "A", (2, 2))


def test_rectangles_fig9b(fig9b):
    fams = detect_rectangles(fig9b)
    assert {t: f.values for t, f in fams.items()} == {
        "ax": (5, 5, 8, 8), "ay": (3, 5, 5, 5, 5), "bx": (2, 7, 7, 7, 7), "by": (2, 2, 9, 9)}


def test_rectangles_fig9a(fig9a):
    fams = detect_rectangles(fig9a)
    assert {t: f.values for t, f in fams.items()} == {
        "ax": (2, 2, 2, 2, 5), "ay": (2, 7, 7, 7, 7), "bx": (2, 2, 5, 5, 5, 5), "by": (2, 2, 7, 7)}


def test_rectangles_empty_when_alternating():
    labels = (1, 2, 1, -1, -2, -1)
    d = diagram_from_hookup(labels, labels, [1, 1, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1], 0)
    assert not any(detect_rectangles(d).values())


def test_random_dual_counts():
    rng = random.Random(5)
    for _ in range(100):
        d = random_diagram(rng)
        raw = raw_dual_letters(d)
        assert sum(len(w) for w in raw.values()) == complexity(d)
        for h, w in raw.items():
            assert Counter(x.gen for x in w) == weighted_crossings(d, h)
