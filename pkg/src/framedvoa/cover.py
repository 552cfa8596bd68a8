"""Hamming-code covers of 1/16-words and the structure-code condition (1).

A cover of ``alpha`` inside ``D`` is a subcode ``E`` of ``D`` together with a
partition of ``Supp(alpha)`` into 8-sets such that ``E`` is the direct sum of
one copy of the extended Hamming code per block.

Search: shorten ``D`` to ``Supp(alpha)``, list its weight-4 words from
syndrome collisions, and grow blocks as ``w1 | w2 | w3`` where ``w1, w2`` meet
in two points and ``w3`` closes the pair up.  Blocks are tried in a
deterministic order with backtracking; failed remainders are memoised.
Worst case is exponential in the number of blocks.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .codes import BitWord, LinearCode, bits_of, popcount


def is_hamming_block(code: LinearCode, block: int) -> bool:
    """``code`` (all supported in ``block``) is a permuted [8,4,4] code on it.

    Doubly even and self-dual on 8 points characterises it up to permutation.
    """
    if popcount(block) != 8 or code.support_mask() & ~block:
        return False
    local, _ = code.compress(block)
    return local.dim == 4 and local.is_doubly_even() and local.is_self_dual()


@dataclass(frozen=True)
class HammingCover:
    alpha: BitWord
    blocks: tuple[tuple[int, ...], ...]  # 0-based coordinates, sorted
    code: LinearCode

    def block_codes(self) -> list[LinearCode]:
        out = []
        for b in self.blocks:
            mask = sum(1 << i for i in b)
            out.append(self.code.shorten(mask))
        return out

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "blocks": [[i + 1 for i in b] for b in self.blocks],
            "dim": self.code.dim,
        }


def verify_cover(d: LinearCode, alpha: BitWord, cover: HammingCover) -> bool:
    """Independent check of every property a cover must have."""
    e = cover.code
    if not e.is_subcode_of(d):
        return False
    if e.support_mask() != alpha.bits:
        return False
    masks = [sum(1 << i for i in b) for b in cover.blocks]
    seen = 0
    for m in masks:
        if seen & m:
            return False
        seen |= m
    if seen != alpha.bits:
        return False
    parts = cover.block_codes()
    if sum(p.dim for p in parts) != e.dim:
        return False
    return all(is_hamming_block(p, m) for p, m in zip(parts, masks))


def weight4_words(local: LinearCode) -> list[int]:
    """All weight-4 words of ``local`` via pairs of parity-check columns."""
    cols = local.parity_columns()
    by_syn: dict[int, list[int]] = defaultdict(list)
    for i, j in combinations(range(local.length), 2):
        by_syn[cols[i] ^ cols[j]].append(1 << i | 1 << j)
    found = set()
    for pairs in by_syn.values():
        for p, q in combinations(pairs, 2):
            if not p & q:
                found.add(p | q)
    return sorted(found)


@dataclass
class _Search:
    words: list[int]
    by_point: dict[int, list[int]] = field(default_factory=dict)
    by_pair: dict[int, list[int]] = field(default_factory=dict)
    dead: set[int] = field(default_factory=set)

    def __post_init__(self):
        bp: dict[int, list[int]] = defaultdict(list)
        bq: dict[int, list[int]] = defaultdict(list)
        for w in self.words:
            pts = list(bits_of(w))
            for p in pts:
                bp[p].append(w)
            for a, b in combinations(pts, 2):
                bq[1 << a | 1 << b].append(w)
        self.by_point, self.by_pair = dict(bp), dict(bq)

    def blocks_at(self, c: int, remaining: int):
        tried = set()
        for w1 in self.by_point.get(c, ()):
            if w1 & ~remaining:
                continue
            for a, b in combinations(list(bits_of(w1)), 2):
                pair = 1 << a | 1 << b
                for w2 in self.by_pair.get(pair, ()):
                    if w2 == w1 or w2 & ~remaining or popcount(w1 & w2) != 2:
                        continue
                    inter = w1 & w2
                    six = w1 | w2
                    for w3 in self.by_pair.get(inter, ()):
                        if w3 & ~remaining or w3 & six != inter:
                            continue
                        block = six | w3
                        if block in tried:
                            continue
                        tried.add(block)
                        gens = self.hamming_in(block, (w1, w2, w3))
                        if gens is not None:
                            yield block, gens

    def hamming_in(self, block: int, gens: tuple[int, int, int]):
        base = LinearCode(64, gens)
        for p in bits_of(block):
            for w4 in self.by_point.get(p, ()):
                if w4 & ~block or w4 in base:
                    continue
                if any(popcount(w4 & g) % 2 for g in gens):
                    continue
                cand = LinearCode(64, gens + (w4,))
                if is_hamming_block(cand, block):
                    return gens + (w4,)
            break  # every H8 on the block has a word through its first point
        return None

    def run(self, remaining: int) -> list[tuple[int, tuple[int, ...]]] | None:
        if not remaining:
            return []
        if remaining in self.dead:
            return None
        c = (remaining & -remaining).bit_length() - 1
        for block, gens in self.blocks_at(c, remaining):
            rest = self.run(remaining & ~block)
            if rest is not None:
                return [(block, gens)] + rest
        self.dead.add(remaining)
        return None


def find_hamming_cover(d: LinearCode, alpha: BitWord) -> HammingCover | None:
    """A Hamming cover of ``alpha`` inside ``d``, or ``None`` if there is none."""
    n = d.length
    if alpha.length != n:
        return None
    if alpha.weight % 8:
        return None
    if not alpha.bits:
        return HammingCover(alpha, (), LinearCode.zero(n))
    short = d.shorten(alpha.bits)
    local, coords = short.compress(alpha.bits)
    search = _Search(weight4_words(local))
    found = search.run((1 << len(coords)) - 1)
    if found is None:
        return None
    blocks, gens = [], []
    for block, g in found:
        blocks.append(tuple(sorted(coords[i] for i in bits_of(block))))
        for w in g:
            gens.append(sum(1 << coords[i] for i in bits_of(w)))
    blocks.sort()
    return HammingCover(alpha, tuple(blocks), LinearCode(n, tuple(gens)))


@dataclass(frozen=True)
class CodePair:
    d: LinearCode
    s: LinearCode

    def __post_init__(self):
        if self.d.length != self.s.length:
            raise ValueError("structure codes must have equal length")

    @property
    def length(self) -> int:
        return self.d.length


@dataclass
class Condition1Report:
    d_even: bool
    s_even: bool
    d_in_s_perp: bool
    covers: dict[BitWord, HammingCover | None]

    @property
    def uncovered(self) -> list[BitWord]:
        return sorted(a for a, c in self.covers.items() if c is None)

    @property
    def passed(self) -> bool:
        return self.d_even and self.s_even and self.d_in_s_perp and not self.uncovered

    def to_json(self) -> dict:
        return {
            "d_even": self.d_even,
            "s_even": self.s_even,
            "d_in_s_perp": self.d_in_s_perp,
            "checked": len(self.covers),
            "uncovered": [str(a) for a in self.uncovered],
            "covers": [c.to_json() for _, c in sorted(self.covers.items()) if c is not None],
            "passed": self.passed,
        }


def check_condition1(pair: CodePair) -> Condition1Report:
    d, s = pair.d, pair.s
    covers = {}
    for alpha in s.codewords():
        cover = find_hamming_cover(d, alpha)
        if cover is not None and not verify_cover(d, alpha, cover):
            raise AssertionError(f"cover search returned an invalid cover for {alpha}")
        covers[alpha] = cover
    return Condition1Report(
        d_even=d.is_even(),
        s_even=s.is_even(),
        d_in_s_perp=d.is_subcode_of(s.dual()),
        covers=covers,
    )
