"""Binary linear codes over GF(2).

Words are stored as Python ints: coordinate ``i`` (0-based) is bit ``i``.
The printed form reads coordinates left to right, so ``"1000"`` is the int
``0b0001``.  Supports are reported 1-based to match the usual
``Omega = {1, ..., n}`` convention.

Codes keep a fully reduced row-echelon basis (pivot = highest set bit), which
makes equality, hashing and coset representatives canonical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence


class CodeError(ValueError):
    pass


class LengthMismatch(CodeError):
    pass


class NotASubcode(CodeError):
    pass


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_of(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, order=True)
class BitWord:
    """A word of ``Z_2^n``."""

    bits: int
    length: int

    def __post_init__(self):
        if self.length <= 0:
            raise CodeError("length must be positive")
        if self.bits < 0 or self.bits >> self.length:
            raise CodeError(f"bits {self.bits:#x} do not fit length {self.length}")

    @classmethod
    def from_str(cls, s: str) -> "BitWord":
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise CodeError(f"not a 0/1 string: {s!r}")
        return cls(sum(1 << i for i, ch in enumerate(s) if ch == "1"), len(s))

    @classmethod
    def from_support(cls, support: Iterable[int], length: int) -> "BitWord":
        """Build from 1-based coordinates."""
        return cls(sum(1 << (i - 1) for i in support), length)

    @classmethod
    def zero(cls, length: int) -> "BitWord":
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> "BitWord":
        return cls(full_mask(length), length)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    def _check(self, other: "BitWord") -> None:
        if self.length != other.length:
            raise LengthMismatch(f"lengths {self.length} and {other.length}")

    def __add__(self, other: "BitWord") -> "BitWord":
        self._check(other)
        return BitWord(self.bits ^ other.bits, self.length)

    __xor__ = __add__
    __sub__ = __add__

    def dot(self, other: "BitWord") -> int:
        self._check(other)
        return popcount(self.bits & other.bits) & 1

    @property
    def weight(self) -> int:
        return popcount(self.bits)

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i in bits_of(self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __getitem__(self, i: int) -> int:
        """0-based coordinate access."""
        if not 0 <= i < self.length:
            raise IndexError(i)
        return self.bits >> i & 1


def weight(w: BitWord) -> int:
    return w.weight


def support(w: BitWord) -> frozenset[int]:
    return w.support()


def _insert(basis: dict[int, int], w: int) -> int:
    """Reduce ``w`` against ``basis`` (pivot bit -> row); add it if new.

    Returns the reduced word (0 means ``w`` was already in the span).
    """
    while w:
        top = w.bit_length() - 1
        row = basis.get(top)
        if row is None:
            basis[top] = w
            return w
        w ^= row
    return 0


def _rref(basis: dict[int, int]) -> tuple[int, ...]:
    pivots = sorted(basis, reverse=True)
    rows = {p: basis[p] for p in pivots}
    # clear every pivot column in all other rows
    for p in pivots:
        r = rows[p]
        for q in pivots:
            if q != p and rows[q] >> p & 1:
                rows[q] ^= r
    return tuple(rows[p] for p in pivots)


@dataclass(frozen=True)
class LinearCode:
    length: int
    basis: tuple[int, ...] = ()
    _pivots: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.length <= 0:
            raise CodeError("length must be positive")
        rows: dict[int, int] = {}
        for w in self.basis:
            if w < 0 or w >> self.length:
                raise LengthMismatch(f"basis word {w:#x} exceeds length {self.length}")
            _insert(rows, w)
        object.__setattr__(self, "basis", _rref(rows))
        object.__setattr__(self, "_pivots", tuple(r.bit_length() - 1 for r in self.basis))

    # -- construction ---------------------------------------------------

    @classmethod
    def span(cls, generators: Sequence[BitWord], length: int | None = None) -> "LinearCode":
        lengths = {g.length for g in generators}
        if length is not None:
            lengths.add(length)
        if len(lengths) > 1:
            raise LengthMismatch(f"generators have lengths {sorted(lengths)}")
        if not lengths:
            raise CodeError("length required for an empty span")
        return cls(lengths.pop(), tuple(g.bits for g in generators))

    @classmethod
    def from_strings(cls, rows: Iterable[str], length: int | None = None) -> "LinearCode":
        return cls.span([BitWord.from_str(r) for r in rows], length)

    @classmethod
    def zero(cls, length: int) -> "LinearCode":
        return cls(length)

    @classmethod
    def full(cls, length: int) -> "LinearCode":
        return cls(length, tuple(1 << i for i in range(length)))

    # -- basic queries --------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << self.dim

    def __len__(self) -> int:
        return self.size

    def reduce(self, w: int) -> int:
        """Canonical representative of ``w + C`` (zero on every pivot)."""
        for row, p in zip(self.basis, self._pivots):
            if w >> p & 1:
                w ^= row
        return w

    def __contains__(self, w: BitWord | int) -> bool:
        if isinstance(w, BitWord):
            if w.length != self.length:
                return False
            w = w.bits
        return self.reduce(w) == 0

    def words(self) -> Iterator[int]:
        """All codewords as ints, in Gray-code order."""
        w = 0
        yield w
        for i in range(1, self.size):
            w ^= self.basis[(i & -i).bit_length() - 1]
            yield w

    def codewords(self) -> Iterator[BitWord]:
        for w in self.words():
            yield BitWord(w, self.length)

    def basis_words(self) -> list[BitWord]:
        return [BitWord(b, self.length) for b in self.basis]

    def support_mask(self) -> int:
        m = 0
        for b in self.basis:
            m |= b
        return m

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i in bits_of(self.support_mask()))

    def is_subcode_of(self, other: "LinearCode") -> bool:
        return self.length == other.length and all(b in other for b in self.basis)

    def __le__(self, other: "LinearCode") -> bool:
        return self.is_subcode_of(other)

    def __add__(self, other: "LinearCode") -> "LinearCode":
        if self.length != other.length:
            raise LengthMismatch("code lengths differ")
        return LinearCode(self.length, self.basis + other.basis)

    # -- duality and parity ---------------------------------------------

    def dual(self) -> "LinearCode":
        pivot_set = set(self._pivots)
        out = []
        for f in range(self.length):
            if f in pivot_set:
                continue
            x = 1 << f
            for row, p in zip(self.basis, self._pivots):
                if row >> f & 1:
                    x |= 1 << p
            out.append(x)
        return LinearCode(self.length, tuple(out))

    def is_even(self) -> bool:
        return all(popcount(b) % 2 == 0 for b in self.basis)

    def is_self_orthogonal(self) -> bool:
        return all(popcount(a & b) % 2 == 0 for a in self.basis for b in self.basis)

    def is_doubly_even(self) -> bool:
        # wt(a+b) = wt(a) + wt(b) - 2|a & b|, so basis data decides it
        return all(popcount(b) % 4 == 0 for b in self.basis) and self.is_self_orthogonal()

    def is_self_dual(self) -> bool:
        return 2 * self.dim == self.length and self.is_self_orthogonal()

    def weight_enumerator(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for w in self.words():
            k = popcount(w)
            counts[k] = counts.get(k, 0) + 1
        return dict(sorted(counts.items()))

    # -- shortening / puncturing ----------------------------------------

    def shorten(self, mask: int) -> "LinearCode":
        """Subcode of words supported inside ``mask`` (length unchanged)."""
        outside = full_mask(self.length) & ~mask
        pending: dict[int, tuple[int, int]] = {}
        kept = []
        for b in self.basis:
            o, w = b & outside, b
            while o:
                top = o.bit_length() - 1
                hit = pending.get(top)
                if hit is None:
                    pending[top] = (o, w)
                    break
                o ^= hit[0]
                w ^= hit[1]
            else:
                kept.append(w)
        return LinearCode(self.length, tuple(kept))

    def puncture(self, keep: int) -> "LinearCode":
        """Projection onto the coordinates in ``keep`` (length unchanged)."""
        return LinearCode(self.length, tuple(b & keep for b in self.basis))

    def compress(self, keep: int) -> tuple["LinearCode", list[int]]:
        """Projection onto ``keep`` re-indexed to ``0..|keep|-1``.

        Returns the new code and the list of original coordinates.
        """
        coords = list(bits_of(keep))
        rows = tuple(_compress_word(b, coords) for b in self.basis)
        return LinearCode(max(len(coords), 1), rows), coords

    def parity_columns(self) -> list[int]:
        """Syndrome of each unit vector against the dual basis."""
        h = self.dual().basis
        return [sum(1 << r for r, row in enumerate(h) if row >> i & 1) for i in range(self.length)]

    def syndrome(self, w: int) -> int:
        cols = self.parity_columns()
        s = 0
        for i in bits_of(w):
            s ^= cols[i]
        return s

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "dim": self.dim,
            "basis": [str(BitWord(b, self.length)) for b in self.basis],
        }


def _compress_word(w: int, coords: Sequence[int]) -> int:
    return sum(1 << j for j, c in enumerate(coords) if w >> c & 1)


def _expand_word(w: int, coords: Sequence[int]) -> int:
    return sum(1 << c for j, c in enumerate(coords) if w >> j & 1)


def span(generators: Sequence[BitWord], length: int | None = None) -> LinearCode:
    return LinearCode.span(generators, length)


def dual(code: LinearCode) -> LinearCode:
    return code.dual()


def is_even(x: BitWord | LinearCode) -> bool:
    if isinstance(x, BitWord):
        return x.weight % 2 == 0
    return x.is_even()


def is_doubly_even(x: BitWord | LinearCode) -> bool:
    if isinstance(x, BitWord):
        return x.weight % 4 == 0
    return x.is_doubly_even()


def split_even_odd(code: LinearCode) -> tuple[LinearCode, BitWord | None]:
    """Return ``(D0, r)`` with ``D0`` the even-weight subcode and ``D1 = D0 + r``.

    ``r`` is ``None`` when the code is even.
    """
    odd = [b for b in code.basis if popcount(b) % 2]
    if not odd:
        return code, None
    o = odd[0]
    rows = tuple(b ^ o if popcount(b) % 2 else b for b in code.basis if b != o)
    return LinearCode(code.length, rows), BitWord(o, code.length)


def complement_basis(code: LinearCode, sub: LinearCode) -> list[int]:
    """Basis words of ``code`` spanning a complement of ``sub``."""
    if not sub.is_subcode_of(code):
        raise NotASubcode("sub-code is not contained in the code")
    rows = {p: r for p, r in zip(sub._pivots, sub.basis)}
    out = []
    for b in code.basis:
        if _insert(rows, b):
            out.append(b)
    return out


def coset_representatives(code: LinearCode, sub: LinearCode) -> Iterator[BitWord]:
    comp = complement_basis(code, sub)
    for w in LinearCode(code.length, tuple(comp)).words() if comp else [0]:
        yield BitWord(w, code.length)


def coset_decomposition(code: LinearCode, sub: LinearCode) -> list[BitWord]:
    """One representative per coset of ``sub`` in ``code``; ``|code|/|sub|`` of them."""
    return list(coset_representatives(code, sub))


def coset_min_weight(code: LinearCode, w: int, max_weight: int | None = None) -> int:
    """Minimum weight in ``w + code``.

    Small codes are enumerated.  Larger ones use a meet-in-the-middle search on
    syndromes with increasing weight; overlapping halves only ever produce
    lighter words, which were already ruled out at an earlier weight.
    """
    if code.dim <= 14:
        return min(popcount(w ^ c) for c in code.words())
    cols = code.parity_columns()
    target = 0
    for i in bits_of(w):
        target ^= cols[i]
    if target == 0:
        return 0
    n = code.length
    limit = n if max_weight is None else max_weight
    sums: dict[int, set[int]] = {0: {0}}

    def layer(k: int) -> set[int]:
        if k not in sums:
            sums[k] = {_xor_cols(cols, c) for c in combinations(range(n), k)}
        return sums[k]

    for t in range(1, limit + 1):
        a, b = t // 2, t - t // 2
        small = layer(a)
        for combo in combinations(range(n), b):
            if target ^ _xor_cols(cols, combo) in small:
                return t
    raise CodeError("coset weight exceeds search limit")


def _xor_cols(cols: Sequence[int], idx: Iterable[int]) -> int:
    s = 0
    for i in idx:
        s ^= cols[i]
    return s


def solve_affine(rows: Sequence[tuple[int, int]], nvars: int) -> int | None:
    """Solve ``<row, x> = rhs`` over GF(2) for ``x`` (an int of ``nvars`` bits).

    ``rows`` holds ``(coefficient_mask, rhs_bit)`` pairs.  Free variables are
    set to zero; returns ``None`` if inconsistent.
    """
    piv: dict[int, tuple[int, int]] = {}
    for mask, rhs in rows:
        while mask:
            top = mask.bit_length() - 1
            hit = piv.get(top)
            if hit is None:
                piv[top] = (mask, rhs)
                break
            mask ^= hit[0]
            rhs ^= hit[1]
        else:
            if rhs:
                return None
    x = 0
    for top in sorted(piv):
        mask, rhs = piv[top]
        val = rhs ^ (popcount(mask & x & ~(1 << top)) & 1)
        if val:
            x |= 1 << top
    return x


# -- the explicit codes -------------------------------------------------

H8_GENERATORS = ("11111111", "11110000", "11001100", "10101010")

RM41_GENERATORS = (
    "1" * 16,
    "1" * 8 + "0" * 8,
    "1111000011110000",
    "1100110011001100",
    "1010101010101010",
)


def hamming_h8() -> LinearCode:
    return LinearCode.from_strings(H8_GENERATORS)


def rm41() -> LinearCode:
    return LinearCode.from_strings(RM41_GENERATORS)


def _triple(a: int, b: int, c: int) -> int:
    return a | b << 16 | c << 32


def build_s_natural() -> LinearCode:
    """The length-48 code of words (a,a,a), (a^c,a,a), (a,a^c,a), (a,a,a^c)."""
    ones = full_mask(16)
    words = []
    for a in rm41().words():
        ac = a ^ ones
        words += [_triple(a, a, a), _triple(ac, a, a), _triple(a, ac, a), _triple(a, a, ac)]
    code = LinearCode(48, tuple(words))
    if code.size != len(set(words)):
        raise CodeError("the displayed set is not closed under addition")
    return code


def s_natural_words() -> list[BitWord]:
    ones = full_mask(16)
    out = set()
    for a in rm41().words():
        ac = a ^ ones
        out |= {_triple(a, a, a), _triple(ac, a, a), _triple(a, ac, a), _triple(a, a, ac)}
    return [BitWord(w, 48) for w in sorted(out)]


def d_natural() -> LinearCode:
    return build_s_natural().dual()


def phi(eps: int, alpha: int) -> int:
    """Embed a length-47 word as ``(eps, alpha)`` in length 48."""
    return (eps & 1) | alpha << 1


def derived_codes() -> tuple[LinearCode, BitWord, LinearCode]:
    """``(D_flat0, representative of D_flat1, S_flat)`` of length 47."""
    dn = d_natural()
    first = 1
    d0 = dn.shorten(full_mask(48) & ~first)
    d_flat0 = LinearCode(47, tuple(b >> 1 for b in d0.basis))
    odd = [b for b in dn.basis if b & first]
    if not odd:
        raise CodeError("first coordinate vanishes on D_natural")
    d_flat1 = BitWord(odd[0] >> 1, 47)
    s0 = build_s_natural().shorten(full_mask(48) & ~first)
    s_flat = LinearCode(47, tuple(b >> 1 for b in s0.basis))
    return d_flat0, d_flat1, s_flat


# -- file formats ---------------------------------------------------------


def parse_code_text(text: str) -> LinearCode:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if rows and len(line) != len(rows[0]):
            raise CodeError(f"line {lineno}: ragged word of length {len(line)}, expected {len(rows[0])}")
        rows.append(line)
    if not rows:
        raise CodeError("no codewords in input")
    return LinearCode.from_strings(rows)


def load_code(path: str | Path) -> LinearCode:
    return parse_code_text(Path(path).read_text(encoding="utf-8"))


def dump_code_text(code: LinearCode) -> str:
    lines = [f"# length {code.length}, dim {code.dim}"]
    lines += [str(BitWord(b, code.length)) for b in code.basis]
    return "\n".join(lines) + "\n"


def code_from_json(data: dict) -> LinearCode:
    code = LinearCode.from_strings(data["basis"], data["length"]) if data["basis"] else LinearCode.zero(data["length"])
    if code.dim != data.get("dim", code.dim):
        raise CodeError("dim field disagrees with basis rank")
    return code


def code_json_dumps(code: LinearCode) -> str:
    return json.dumps(code.to_json(), sort_keys=True)
