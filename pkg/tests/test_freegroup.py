import pytest
from hypothesis import given, settings, strategies as st

from heegaard_rr.freegroup import (
    BasisMap,
    CyclicWord,
    Letter,
    SubstitutionError,
    Word,
    WordError,
    WhiteheadMove,
    apply_whitehead,
    christoffel_word,
    cword,
    cyclic_reduce,
    free_reduce,
    invert,
    is_primitive,
    minimal_orbit,
    oriented,
    parse_letters,
    proper_power_root,
    substitute,
    total_length,
    two_syllable_form,
    whitehead_moves,
    whitehead_reduce,
    word,
)

from oracles import canon_str, christoffel_cutting_sequence, cyclic_reduce_str, expand, reduce_str

letters = st.lists(st.sampled_from("AaBb"), max_size=30).map("".join)


def s(w) -> str:
    return "".join(str(x) for x in w.letters)


# -- parsing and reduction ---------------------------------------------------------


def test_parse_expands_powers_and_groups():
    assert s(word("A^5De^3")) == "AAAAADeee"
    assert s(word("(Ab)^2")) == "AbAb"
    assert s(word("(Ab)^-1")) == "Ba"
    assert s(word("1")) == ""


@pytest.mark.parametrize("bad", ["A^", "(AB", "AB)", "A^x", "^2", "A-B"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(WordError):
        parse_letters(bad)


def test_free_reduce_examples():
    assert s(free_reduce(parse_letters("AaB"))) == "B"
    assert s(free_reduce(parse_letters("ABba"))) == ""
    assert str(free_reduce(parse_letters("A^5De^3"))) == "A^5De^3"


def test_cyclic_reduce_examples():
    assert s(cyclic_reduce(word("bAB"))) == "A"
    assert cyclic_reduce(word("Y^5x^3Y^2")) == cword("Y^7x^3")


def test_invert_examples():
    assert invert(word("A^5De^3")) == word("E^3da^5")
    assert invert(Word()) == Word()
    assert invert(invert(cword("A^5B^9a^3"))) == cword("A^5B^9a^3")


def test_cyclic_word_canonical_rotation_order():
    # A < a < B < b
    assert s(cword("BA")) == "AB"
    assert s(cword("bA")) == "Ab"
    assert s(cword("Ba")) == "aB"


def test_oriented_picks_smaller_of_word_and_inverse():
    w = cword("A^5B^9(A^5B^9A^5B^2a^3B^2)^2")
    assert oriented(w) == oriented(w.inverse())
    assert oriented(w) in (w, w.inverse())


def test_total_length():
    assert total_length([cword("A^5B^5")]) == 10
    assert total_length([]) == 0


def test_substitute_examples():
    m = BasisMap.of({"D": "a^5E^3", "C": "C"})
    assert substitute(cword("DC^2DC^3"), m) == cword("a^5E^3C^2a^5E^3C^3")
    m2 = BasisMap.of({"D": "a^5E^3", "A": "A", "C": "C", "E": "E"})
    assert substitute(cword("dA^2cA^2e^2"), m2) == cword("A^7cA^2e^5")
    w = cword("A^3bAB")
    assert substitute(w, BasisMap.of({"A": "A", "B": "B"})) == w


def test_substitute_unmapped_generator_named():
    with pytest.raises(SubstitutionError, match="D"):
        substitute(word("AD"), BasisMap.of({"A": "B"}))


# -- Whitehead moves ----------------------------------------------------------------


def test_whitehead_examples():
    m = WhiteheadMove(0, -1)  # (A,B) -> (Ab, B)
    assert str(m.as_map().as_dict()["A"]) == "Ab"
    assert apply_whitehead(cword("ABAB"), m) == cword("A^2")
    assert apply_whitehead(cword("AB^2"), m) == cword("AB")
    for mv in whitehead_moves():
        if mv.target == 0:
            assert apply_whitehead(cword("B"), mv) == cword("B")


def test_four_moves():
    maps = sorted(str(m.as_map().as_dict()[("A", "B")[m.target]]) for m in whitehead_moves())
    assert maps == ["AB", "Ab", "BA", "Ba"]


def test_primitivity_examples():
    assert is_primitive(cword("A"))[0]
    ok, trace = is_primitive(cword("AB^2"))
    assert ok and len(trace) == 2
    assert not is_primitive(cword("ABab"))[0]


def test_proper_power_examples():
    assert proper_power_root(cword("B^7")) == ("B", 7)
    root = proper_power_root(cword("ABAB"))
    assert root is not None and root[1] == 2
    assert proper_power_root(cword("AB")) is None


def test_two_syllable_form():
    assert two_syllable_form(cword("A^8B^7")) == (8, 7)
    assert two_syllable_form(cword("Y^5x^3Y^2")) is not None


def test_minimal_orbit_cap():
    with pytest.raises(OverflowError):
        minimal_orbit([cword("A^3B^3")], cap=2)


# -- Christoffel words --------------------------------------------------------------


def test_christoffel_examples():
    assert christoffel_word(5, 2, "C", "D") == cword("DC^2DC^3")
    assert christoffel_word(1, 1, "C", "D") == cword("DC")
    for n in range(2, 10):
        assert christoffel_word(n, 1, "C", "D") == cword(f"DC^{n}")


def test_christoffel_rejects_non_coprime():
    with pytest.raises(WordError):
        christoffel_word(4, 2)


@pytest.mark.parametrize("p,q", [(5, 2), (3, 4), (7, 5), (1, 6), (8, 3)])
def test_christoffel_matches_line_cutting_sequence(p, q):
    assert s(christoffel_word(p, q, "C", "D")) == canon_str(christoffel_cutting_sequence(p, q))


# -- properties against the string oracle ------------------------------------------


@settings(max_examples=300, deadline=None)
@given(letters)
def test_reduction_agrees_with_oracle(w):
    assert s(free_reduce(parse_letters(w or "1"))) == reduce_str(w)
    assert s(CyclicWord.parse(w or "1")) == canon_str(w)


@settings(max_examples=300, deadline=None)
@given(letters, letters)
def test_conjugation_invariance(u, w):
    uw = Word.parse(u or "1") * Word.parse(w or "1") * Word.parse(u or "1").inverse()
    assert cyclic_reduce(uw) == cyclic_reduce(Word.parse(w or "1"))


@settings(max_examples=300, deadline=None)
@given(letters, st.sampled_from(whitehead_moves()))
def test_whitehead_invertible(w, m):
    c = CyclicWord.parse(w or "1")
    assert apply_whitehead(apply_whitehead(c, m), m.inverse()) == c


@settings(max_examples=200, deadline=None)
@given(letters.filter(bool))
def test_primitive_and_proper_power_exclusive(w):
    c = CyclicWord.parse(w)
    if len(c):
        assert not (is_primitive(c)[0] and proper_power_root(c) is not None)


@settings(max_examples=200, deadline=None)
@given(letters)
def test_whitehead_reduce_leaves_no_reducing_move(w):
    c = CyclicWord.parse(w or "1")
    (m,), _ = whitehead_reduce([c], ("A", "B"))
    assert all(len(apply_whitehead(m, mv)) >= len(m) for mv in whitehead_moves())


@settings(max_examples=200, deadline=None)
@given(letters, st.sampled_from(["A", "a", "B", "b"]), st.sampled_from(["A", "a", "B", "b"]))
def test_signed_permutation_preserves_length(w, x, y):
    if x.upper() == y.upper():
        return
    c = CyclicWord.parse(w or "1")
    m = BasisMap.relabel({"A": x, "B": y})
    assert total_length([substitute(c, m)]) == total_length([c])
