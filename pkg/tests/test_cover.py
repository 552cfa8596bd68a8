import random

from framedvoa.codes import BitWord, LinearCode, full_mask, hamming_h8
from framedvoa.cover import CodePair, HammingCover, check_condition1, find_hamming_cover, is_hamming_block, verify_cover
from framedvoa.fusion import hamming_sum


def _permuted_hamming_sum(blocks, n, seed):
    """Direct sum of H8 copies placed on shuffled coordinates inside length ``n``."""
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    base = hamming_sum(blocks)
    rows = []
    for b in base.basis:
        rows.append(sum(1 << perm[i] for i in range(8 * blocks) if b >> i & 1))
    alpha = sum(1 << perm[i] for i in range(8 * blocks))
    return LinearCode(n, tuple(rows)), BitWord(alpha, n)


def test_h8_is_its_own_cover():
    h8 = hamming_h8()
    cover = find_hamming_cover(h8, BitWord.ones(8))
    assert cover is not None
    assert cover.blocks == (tuple(range(8)),)
    assert verify_cover(h8, BitWord.ones(8), cover)
    assert cover.to_json()["blocks"] == [[1, 2, 3, 4, 5, 6, 7, 8]]


def test_recovers_hidden_block_structure():
    for blocks, seed in ((1, 0), (2, 1), (3, 2), (4, 3)):
        d, alpha = _permuted_hamming_sum(blocks, 8 * blocks + 5, seed)
        cover = find_hamming_cover(d, alpha)
        assert cover is not None
        assert len(cover.blocks) == blocks
        assert verify_cover(d, alpha, cover)


def test_zero_word_has_empty_cover():
    d = hamming_h8()
    cover = find_hamming_cover(d, BitWord.zero(8))
    assert cover.blocks == () and verify_cover(d, BitWord.zero(8), cover)


def test_no_cover_inside_too_small_code():
    # every 8-set needs a 4-dimensional Hamming code; a 3-dim subcode cannot host it
    h8 = hamming_h8()
    sub = LinearCode(8, h8.basis[:3])
    assert find_hamming_cover(sub, BitWord.ones(8)) is None
    assert find_hamming_cover(LinearCode.zero(8), BitWord.ones(8)) is None
    assert find_hamming_cover(h8, BitWord.from_str("11110000")) is None


def test_verify_cover_rejects_tampering():
    h8 = hamming_h8()
    good = find_hamming_cover(h8, BitWord.ones(8))
    shrunk = HammingCover(good.alpha, good.blocks, LinearCode(8, h8.basis[:3]))
    assert not verify_cover(h8, BitWord.ones(8), shrunk)
    wrong_blocks = HammingCover(good.alpha, ((0, 1, 2, 3), (4, 5, 6, 7)), good.code)
    assert not verify_cover(h8, BitWord.ones(8), wrong_blocks)
    outside = LinearCode(8, (full_mask(8),))
    assert not verify_cover(outside, BitWord.ones(8), good)


def test_is_hamming_block():
    h8 = hamming_h8()
    assert is_hamming_block(h8, full_mask(8))
    assert not is_hamming_block(LinearCode(8, h8.basis[:3]), full_mask(8))


def test_condition1_uncoverable_pair_fails():
    pair = CodePair(LinearCode.zero(8), LinearCode(8, (full_mask(8),)))
    rep = check_condition1(pair)
    assert not rep.passed
    assert rep.uncovered == [BitWord.ones(8)]
    assert rep.to_json()["uncovered"] == ["11111111"]


def test_condition1_hamming_pair_passes():
    h8 = hamming_h8()
    rep = check_condition1(CodePair(h8, LinearCode(8, (full_mask(8),))))
    assert rep.passed and rep.d_in_s_perp


def test_condition1_moonshine_and_baby(moonshine, baby):
    for desc, n_words in ((moonshine, 128), (baby, 64)):
        rep = desc.condition1
        assert rep.passed
        assert len(rep.covers) == n_words
        for alpha, cover in rep.covers.items():
            assert verify_cover(desc.pair.d, alpha, cover)
            assert len(cover.blocks) == alpha.weight // 8
