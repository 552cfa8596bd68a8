import pytest
from hypothesis import given, strategies as st

import oracles
from framedvoa.codes import (
    BitWord,
    CodeError,
    LengthMismatch,
    LinearCode,
    build_s_natural,
    code_from_json,
    coset_decomposition,
    coset_min_weight,
    d_natural,
    derived_codes,
    dump_code_text,
    hamming_h8,
    parse_code_text,
    popcount,
    rm41,
    solve_affine,
    split_even_odd,
)


@st.composite
def codes(draw, max_len=24):
    n = draw(st.integers(1, max_len))
    gens = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=n))
    return LinearCode(n, tuple(gens))


def test_bitword_strings_and_support():
    w = BitWord.from_str("1010")
    assert str(w) == "1010"
    assert w.weight == 2
    assert w.support() == frozenset({1, 3})
    assert BitWord.from_support([1, 3], 4) == w


def test_bitword_rejects_bad_input():
    with pytest.raises(CodeError):
        BitWord.from_str("10a1")
    with pytest.raises(CodeError):
        BitWord(0b100, 2)
    with pytest.raises(LengthMismatch):
        BitWord.from_str("10") + BitWord.from_str("101")


def test_h8_matches_exhaustive_enumeration():
    h8 = hamming_h8()
    words = oracles.closure(oracles.from_strings(["11111111", "11110000", "11001100", "10101010"]))
    assert set(h8.words()) == words
    assert oracles.weight_enumerator(words) == {0: 1, 4: 14, 8: 1}
    assert oracles.brute_dual(words, 8) == words
    assert h8.dim == 4 and h8.is_doubly_even() and h8.is_self_dual()


def test_rm41_is_the_doubly_even_length16_code():
    c = rm41()
    assert set(c.words()) == oracles.rm41_words()
    assert c.dim == 5 and c.is_doubly_even()
    assert c.weight_enumerator() == {0: 1, 8: 30, 16: 1}


def test_s_natural_against_set_oracle():
    s = build_s_natural()
    words = oracles.s_natural_words()
    assert set(s.words()) == words
    assert s.dim == 7
    assert s.weight_enumerator() == {0: 1, 16: 3, 24: 120, 32: 3, 48: 1}


def test_structure_code_dimensions():
    d = d_natural()
    d0, d1, s_flat = derived_codes()
    assert d.dim == 41
    assert d0.dim == 40 and d0.length == 47
    assert s_flat.size == 64
    assert s_flat.weight_enumerator() == {0: 1, 16: 2, 24: 60, 32: 1}
    # the representative of the odd part really lies in the first-coordinate-one coset
    assert (1 | d1.bits << 1) in d
    assert d0.is_even()


@given(codes())
def test_double_dual_and_rank_nullity(c):
    assert c.dual().dual() == c
    assert c.dim + c.dual().dim == c.length


@given(codes(max_len=10))
def test_dual_against_brute_force(c):
    assert set(c.dual().words()) == oracles.brute_dual(set(c.words()), c.length)


@given(codes(max_len=12))
def test_words_closed_and_counted(c):
    words = set(c.words())
    assert len(words) == c.size == 2**c.dim
    assert words == oracles.closure(list(c.basis))


@given(codes(max_len=12))
def test_even_odd_split(c):
    d0, r = split_even_odd(c)
    assert d0.is_even()
    if r is None:
        assert c.is_even()
    else:
        assert popcount(r.bits) % 2 == 1
        assert d0.dim == c.dim - 1
        assert {w ^ r.bits for w in d0.words()} | set(d0.words()) == set(c.words())


@given(codes(max_len=10), st.data())
def test_coset_decomposition_partitions_code(c, data):
    k = data.draw(st.integers(0, c.dim))
    sub = LinearCode(c.length, c.basis[:k])
    reps = coset_decomposition(c, sub)
    assert len(reps) == c.size // sub.size
    cosets = {frozenset(r.bits ^ w for w in sub.words()) for r in reps}
    assert len(cosets) == len(reps)
    assert set().union(*cosets) == set(c.words())


@given(codes(max_len=20), st.data())
def test_coset_min_weight_brute(c, data):
    w = data.draw(st.integers(0, (1 << c.length) - 1))
    expected = min(popcount(w ^ x) for x in oracles.closure(list(c.basis)))
    assert coset_min_weight(c, w) == expected


def test_coset_min_weight_large_code():
    # dim > 14 takes the syndrome search
    d0, _, _ = derived_codes()
    t = d0.dual()
    for w in (0, 1, 0b11, 1 << 46):
        brute = min(popcount(w ^ x) for x in t.words()) if t.dim <= 14 else None
        got = coset_min_weight(d0, w)
        assert got <= popcount(w)
        if brute is not None:
            assert got == brute
    assert coset_min_weight(d0, 0) == 0


@given(st.integers(1, 12), st.data())
def test_solve_affine(nvars, data):
    x = data.draw(st.integers(0, (1 << nvars) - 1))
    masks = data.draw(st.lists(st.integers(0, (1 << nvars) - 1), max_size=16))
    rows = [(m, popcount(m & x) & 1) for m in masks]
    sol = solve_affine(rows, nvars)
    assert sol is not None
    assert all(popcount(m & sol) & 1 == r for m, r in rows)


def test_solve_affine_inconsistent():
    assert solve_affine([(0b1, 0), (0b1, 1)], 1) is None


def test_text_and_json_roundtrip(tmp_path):
    c = d_natural()
    assert parse_code_text(dump_code_text(c)) == c
    assert code_from_json(c.to_json()) == c
    with pytest.raises(CodeError):
        parse_code_text("101\n10\n")
    with pytest.raises(CodeError):
        parse_code_text("# nothing\n")
