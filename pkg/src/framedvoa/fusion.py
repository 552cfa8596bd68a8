"""Label-level fusion rings for Ising-framed modules.

Modules are never built; a module is represented by a hashable label and the
fusion product by an N-linear combination of labels (``FusionElement``).
Rings are explicit finite tables obtained by closing a set of generators.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Union

from .codes import BitWord, LinearCode, coset_min_weight, full_mask, hamming_h8, popcount


class FusionError(ValueError):
    pass


class FusionClosureError(FusionError):
    pass


class NotStableError(FusionError):
    """Induction requested for a module with nonzero stabilizer."""


class Ising(Enum):
    H0 = Fraction(0)
    H12 = Fraction(1, 2)
    H116 = Fraction(1, 16)

    @property
    def weight(self) -> Fraction:
        return self.value

    def __str__(self) -> str:
        return {Ising.H0: "h0", Ising.H12: "h12", Ising.H116: "h116"}[self]

    @classmethod
    def parse(cls, s: str) -> "Ising":
        table = {"h0": cls.H0, "0": cls.H0, "h12": cls.H12, "1/2": cls.H12, "h116": cls.H116, "1/16": cls.H116}
        return table[s.strip().lower()]


def label_key(x) -> str:
    return str(x)


class FusionElement(Mapping):
    """Finite N-linear combination of labels."""

    __slots__ = ("_d",)

    def __init__(self, items: Mapping | Iterable = ()):
        d: dict = {}
        pairs = items.items() if isinstance(items, Mapping) else items
        for label, m in pairs:
            if not isinstance(m, int) or m < 0:
                raise FusionError(f"multiplicity must be a nonnegative int, got {m!r}")
            if m:
                d[label] = d.get(label, 0) + m
        self._d = dict(sorted(d.items(), key=lambda kv: label_key(kv[0])))

    @classmethod
    def single(cls, label) -> "FusionElement":
        return cls({label: 1})

    def __getitem__(self, label) -> int:
        return self._d.get(label, 0)

    def __iter__(self):
        return iter(self._d)

    def __len__(self) -> int:
        return len(self._d)

    def __eq__(self, other) -> bool:
        if isinstance(other, FusionElement):
            return self._d == other._d
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._d.items()))

    def __add__(self, other: "FusionElement") -> "FusionElement":
        return FusionElement(list(self._d.items()) + list(other._d.items()))

    def __mul__(self, k: int) -> "FusionElement":
        return FusionElement({l: m * k for l, m in self._d.items()})

    __rmul__ = __mul__

    def total(self) -> int:
        return sum(self._d.values())

    def as_single(self):
        """The label if this is one label with multiplicity one, else ``None``."""
        if len(self._d) == 1:
            (label, m), = self._d.items()
            if m == 1:
                return label
        return None

    def __str__(self) -> str:
        if not self._d:
            return "0"
        return " + ".join(str(l) if m == 1 else f"{m}*{l}" for l, m in self._d.items())

    __repr__ = __str__

    def to_json(self) -> list[dict]:
        return [{"label": label_key(l), "mult": m} for l, m in self._d.items()]


# -- labels ----------------------------------------------------------------


@dataclass(frozen=True)
class FrameLabel:
    """Tensor product of Ising modules, one per frame coordinate."""

    components: tuple[Ising, ...]

    @classmethod
    def parse(cls, s: str) -> "FrameLabel":
        return cls(tuple(Ising.parse(p) for p in s.strip("()").split(",")))

    @classmethod
    def from_word(cls, word: BitWord) -> "FrameLabel":
        """``U^beta``: h12 where ``beta`` is 1, h0 elsewhere."""
        return cls(tuple(Ising.H12 if word[i] else Ising.H0 for i in range(word.length)))

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.components) + ")"

    def sixteenth_word(self) -> BitWord:
        return BitWord(sum(1 << i for i, c in enumerate(self.components) if c is Ising.H116), len(self.components))


@dataclass(frozen=True)
class CosetLabel:
    """The coset module ``U_{D+gamma}`` over a code VOA ``U_D``."""

    code: LinearCode
    gamma: int

    def __post_init__(self):
        object.__setattr__(self, "gamma", self.code.reduce(self.gamma))

    @classmethod
    def of(cls, code: LinearCode, gamma: BitWord | int = 0) -> "CosetLabel":
        return cls(code, gamma.bits if isinstance(gamma, BitWord) else gamma)

    @property
    def word(self) -> BitWord:
        return BitWord(self.gamma, self.code.length)

    def __str__(self) -> str:
        return f"U[D+{self.word}]"


def hamming_sum(blocks: int) -> LinearCode:
    """``H8 + ... + H8`` on consecutive 8-blocks."""
    h = hamming_h8().basis
    return LinearCode(8 * blocks, tuple(b << (8 * k) for k in range(blocks) for b in h))


@dataclass(frozen=True)
class HammingTwisted:
    """``H(1/16, chi_1) x ... x H(1/16, chi_s)``, one ``chi`` per 8-block, each mod H8."""

    chis: tuple[int, ...]

    def __post_init__(self):
        h = hamming_h8()
        object.__setattr__(self, "chis", tuple(h.reduce(c) for c in self.chis))

    @classmethod
    def of(cls, chi: BitWord | int) -> "HammingTwisted":
        bits = chi.bits if isinstance(chi, BitWord) else chi
        length = chi.length if isinstance(chi, BitWord) else 8
        return cls(tuple(bits >> (8 * k) & 0xFF for k in range(length // 8)))

    @property
    def blocks(self) -> int:
        return len(self.chis)

    @property
    def word(self) -> BitWord:
        return BitWord(sum(c << (8 * k) for k, c in enumerate(self.chis)), 8 * self.blocks)

    def __str__(self) -> str:
        return f"H(1/16,{self.word})"


@dataclass(frozen=True)
class FramedLabel:
    """Module with 1/16-word ``alpha`` whose 0-word part is induced from ``base``.

    Under a Hamming cover of ``alpha`` the irreducible modules with this
    1/16-word are indexed by cosets of ``D``; ``base`` carries that coset.
    ``sign`` records which of the two twisted structures is meant on a
    fixed-point module (``None`` when not applicable).
    """

    alpha: BitWord
    base: CosetLabel
    sign: int | None = None

    def __str__(self) -> str:
        s = "" if self.sign is None else ("+" if self.sign > 0 else "-")
        return f"V[{self.alpha}]{s}({self.base})"


def framed(alpha: BitWord, base: CosetLabel, sign: int | None = None):
    """``FramedLabel`` constructor that collapses the zero word to ``base``."""
    if not alpha.bits and sign is None:
        return base
    return FramedLabel(alpha, base, sign)


@dataclass(frozen=True)
class InducedLabel:
    """``Ind W = sum_{alpha in S} V^alpha x W`` for an S-stable ``W``."""

    grading: LinearCode
    base: object
    components: tuple = field(compare=False)

    def __str__(self) -> str:
        return f"Ind[{self.grading.dim}]({self.base})"

    def __len__(self) -> int:
        return len(self.components)


Label = Union[Ising, FrameLabel, CosetLabel, HammingTwisted, FramedLabel, InducedLabel]


# -- fusion rules ------------------------------------------------------------

_ISING_TABLE = {
    (Ising.H12, Ising.H12): {Ising.H0: 1},
    (Ising.H12, Ising.H116): {Ising.H116: 1},
    (Ising.H116, Ising.H116): {Ising.H0: 1, Ising.H12: 1},
}


def ising_fuse(a: Ising, b: Ising) -> FusionElement:
    if a is Ising.H0:
        return FusionElement.single(b)
    if b is Ising.H0:
        return FusionElement.single(a)
    key = (a, b) if (a, b) in _ISING_TABLE else (b, a)
    return FusionElement(_ISING_TABLE[key])


def frame_fuse(a: FrameLabel, b: FrameLabel) -> FusionElement:
    if len(a) != len(b):
        raise FusionError(f"frame lengths {len(a)} and {len(b)} differ")
    parts = [list(ising_fuse(x, y).items()) for x, y in zip(a.components, b.components)]
    out: dict = {}
    for choice in product(*parts):
        label = FrameLabel(tuple(c for c, _ in choice))
        m = 1
        for _, k in choice:
            m *= k
        out[label] = out.get(label, 0) + m
    return FusionElement(out)


def coset_fuse(a: CosetLabel, b: CosetLabel) -> FusionElement:
    if a.code != b.code:
        raise FusionError("coset modules over different codes")
    return FusionElement.single(CosetLabel(a.code, a.gamma ^ b.gamma))


def hamming_fuse(a: CosetLabel | HammingTwisted, b: CosetLabel | HammingTwisted) -> FusionElement:
    """Fusion among ``U_{H8+alpha}`` and ``H(1/16, chi)``, blockwise."""
    blocks = {x.blocks if isinstance(x, HammingTwisted) else x.code.length // 8 for x in (a, b)}
    if len(blocks) != 1:
        raise FusionError("Hamming labels of different sizes")
    s = blocks.pop()
    code = hamming_sum(s)
    for x in (a, b):
        if isinstance(x, CosetLabel) and x.code != code:
            raise FusionError("coset label is not over the Hamming code VOA")
    word = lambda x: x.gamma if isinstance(x, CosetLabel) else x.word.bits
    total = word(a) ^ word(b)
    twisted = isinstance(a, HammingTwisted) != isinstance(b, HammingTwisted)
    if twisted:
        return FusionElement.single(HammingTwisted.of(BitWord(total, 8 * s)))
    return FusionElement.single(CosetLabel(code, total))


class FramedFamily(Mapping):
    """Every ``FramedLabel(word, D + z)`` with ``z`` in ``center + D + Z2^free``.

    This is what the frame decomposition alone says about a product of two
    modules with different nonzero 1/16-words: on the overlap
    ``h116 x h116 = h0 + h12`` leaves the pattern free, and the Hamming head
    data on the symmetric difference is not fixed by frame-level fusion.
    The true product is one member (with multiplicity); membership is the
    checkable shadow.  Each member is counted once.
    """

    def __init__(self, word: BitWord, code: LinearCode, center: int, free: int):
        self.word = word
        self.code = code
        self.free = free
        self._span = _free_span(code, free)
        self.center = self._span.reduce(center)

    def __getitem__(self, label) -> int:
        if not isinstance(label, FramedLabel) or label.alpha != self.word or label.base.code != self.code:
            return 0
        return int((label.base.gamma ^ self.center) in self._span)

    def __len__(self) -> int:
        return 1 << (self._span.dim - self.code.dim)

    def __iter__(self):
        for rep in coset_representatives_int(self._span, self.code):
            yield FramedLabel(self.word, CosetLabel(self.code, rep ^ self.center))

    def as_single(self):
        if len(self) == 1:
            return next(iter(self))
        return None

    def total(self) -> int:
        return len(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, FramedFamily):
            return (self.word, self.code, self.center, self._span) == (other.word, other.code, other.center, other._span)
        if isinstance(other, FusionElement):
            return len(self) == len(other) and all(self[l] == m for l, m in other.items())
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.word, self.center, self.free))

    def __str__(self) -> str:
        return f"Family[{self.word}; D+{BitWord(self.center, self.code.length)}; {len(self)} classes]"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "word": str(self.word),
            "center": str(BitWord(self.center, self.code.length)),
            "free_support": sorted(i + 1 for i in range(self.code.length) if self.free >> i & 1),
            "classes": len(self),
        }


@lru_cache(maxsize=4096)
def _free_span(code: LinearCode, free: int) -> LinearCode:
    units = tuple(1 << i for i in range(code.length) if free >> i & 1)
    return LinearCode(code.length, code.basis + units)


def coset_representatives_int(code: LinearCode, sub: LinearCode):
    from .codes import complement_basis

    comp = complement_basis(code, sub)
    for mask in range(1 << len(comp)):
        w = 0
        for i, b in enumerate(comp):
            if mask >> i & 1:
                w ^= b
        yield sub.reduce(w)


def framed_fuse(a, b):
    """Fusion of labels graded by 1/16-words over a common code VOA ``U_D``.

    Exact when one factor is a coset module, or when both share the word
    (blockwise Hamming fusion, lifted along the cover).  For two different
    nonzero words the result is a ``FramedFamily``.
    """
    base_a = a.base if isinstance(a, FramedLabel) else a
    base_b = b.base if isinstance(b, FramedLabel) else b
    if base_a.code != base_b.code:
        raise FusionError("framed labels over different codes")
    code = base_a.code
    gamma = base_a.gamma ^ base_b.gamma
    wa = a.alpha if isinstance(a, FramedLabel) else BitWord.zero(code.length)
    wb = b.alpha if isinstance(b, FramedLabel) else BitWord.zero(code.length)
    if not wa.bits or not wb.bits or wa == wb:
        return FusionElement.single(framed(wa + wb, CosetLabel(code, gamma)))
    return FramedFamily(wa + wb, code, gamma, wa.bits | wb.bits)


def fuse(a: Label, b: Label) -> FusionElement:
    """Dispatch on label types."""
    if isinstance(a, Ising) and isinstance(b, Ising):
        return ising_fuse(a, b)
    if isinstance(a, FrameLabel) and isinstance(b, FrameLabel):
        return frame_fuse(a, b)
    if isinstance(a, FramedLabel) or isinstance(b, FramedLabel):
        return framed_fuse(a, b)
    if isinstance(a, HammingTwisted) or isinstance(b, HammingTwisted):
        return hamming_fuse(a, b)
    if isinstance(a, CosetLabel) and isinstance(b, CosetLabel):
        return coset_fuse(a, b)
    raise FusionError(f"no fusion rule for {type(a).__name__} x {type(b).__name__}")


def extend(f: Callable, x: FusionElement, y: FusionElement) -> FusionElement:
    """Bilinear extension of a label-level product."""
    out = FusionElement()
    for lx, mx in x.items():
        for ly, my in y.items():
            out = out + f(lx, ly) * (mx * my)
    return out


# -- fusion tables -----------------------------------------------------------


@dataclass
class FusionTable:
    labels: tuple
    unit: object
    products: dict

    @classmethod
    def closure(cls, generators: Iterable, unit, rule: Callable = fuse, max_labels: int = 4096) -> "FusionTable":
        labels = [unit]
        seen = {unit}
        for g in generators:
            if g not in seen:
                seen.add(g)
                labels.append(g)
        products: dict = {}
        grew = True
        while grew:
            grew = False
            current = list(labels)
            for x in current:
                for y in current:
                    if (x, y) in products:
                        continue
                    res = rule(x, y)
                    products[(x, y)] = res
                    for l in res:
                        if l not in seen:
                            seen.add(l)
                            labels.append(l)
                            grew = True
                            if len(labels) > max_labels:
                                raise FusionClosureError(f"more than {max_labels} labels")
        labels.sort(key=lambda l: (l != unit, label_key(l)))
        return cls(tuple(labels), unit, products)

    def fuse(self, x, y) -> FusionElement:
        try:
            return self.products[(x, y)]
        except KeyError:
            raise FusionClosureError(f"product {x} x {y} not in table") from None

    __call__ = fuse

    def is_closed(self) -> bool:
        labels = set(self.labels)
        for x in self.labels:
            for y in self.labels:
                res = self.products.get((x, y))
                if res is None or any(l not in labels for l in res):
                    return False
        return True

    def is_commutative(self) -> bool:
        return all(self.fuse(x, y) == self.fuse(y, x) for x in self.labels for y in self.labels)

    def has_unit(self) -> bool:
        u = FusionElement.single
        return all(self.fuse(self.unit, x) == u(x) == self.fuse(x, self.unit) for x in self.labels)

    def associativity_failures(self) -> list[tuple]:
        bad = []
        f = self.fuse
        for x in self.labels:
            for y in self.labels:
                xy = f(x, y)
                for z in self.labels:
                    left = extend(f, xy, FusionElement.single(z))
                    right = extend(f, FusionElement.single(x), f(y, z))
                    if left != right:
                        bad.append((x, y, z))
        return bad

    def is_associative(self) -> bool:
        return not self.associativity_failures()

    def to_json(self) -> dict:
        return {
            "labels": [label_key(l) for l in self.labels],
            "products": [
                {"l": label_key(x), "r": label_key(y), "result": self.fuse(x, y).to_json()}
                for x in self.labels
                for y in self.labels
            ],
        }


def ising_ring() -> FusionTable:
    return FusionTable.closure([Ising.H12, Ising.H116], Ising.H0, ising_fuse)


def hamming_ring() -> FusionTable:
    """The 32 labels ``U_{H8+gamma}``, ``H(1/16, chi)`` of the Hamming code VOA."""
    h8 = hamming_h8()
    gens = [CosetLabel(h8, 1 << i) for i in range(8)] + [HammingTwisted.of(0)]
    return FusionTable.closure(gens, CosetLabel(h8, 0), hamming_fuse)


@dataclass(frozen=True)
class SimpleCurrentResult:
    is_simple_current: bool
    witness: object | None

    def __bool__(self) -> bool:
        return self.is_simple_current


def is_simple_current(x, table: FusionTable) -> SimpleCurrentResult:
    """``x`` is a simple current iff some ``W`` has ``x * W = unit`` exactly."""
    if not table.is_closed():
        raise FusionClosureError("fusion table is not closed")
    target = FusionElement.single(table.unit)
    for w in table.labels:
        if table.fuse(x, w) == target:
            return SimpleCurrentResult(True, w)
    return SimpleCurrentResult(False, None)


# -- gradings, stabilizers, induction -------------------------------------

GradedFuse = Callable[[BitWord, object], FusionElement]


def stabilizer(code: LinearCode, w, rule: GradedFuse) -> LinearCode:
    """``{alpha in code : V^alpha x W = W}``, returned as a subcode."""
    target = FusionElement.single(w)
    members = [a for a in code.words() if rule(BitWord(a, code.length), w) == target]
    sub = LinearCode(code.length, tuple(members))
    if sub.size != len(members):
        raise FusionError("stabilizer is not closed under addition")
    return sub


def induce(grading: LinearCode, w, rule: GradedFuse) -> InducedLabel:
    if stabilizer(grading, w, rule).dim:
        raise NotStableError(f"{w} has a nonzero stabilizer; two twisted structures exist, not induced")
    comps = []
    for a in grading.codewords():
        res = rule(a, w).as_single()
        if res is None:
            raise FusionError(f"V^{a} x {w} is not a single irreducible")
        comps.append(res)
    return InducedLabel(grading, w, tuple(sorted(comps, key=label_key)))


def frame_rule(alpha: BitWord, w: FrameLabel) -> FusionElement:
    """``U^alpha x W`` for frame labels, ``U^alpha`` the h12-pattern of ``alpha``."""
    return frame_fuse(FrameLabel.from_word(alpha), w)


def coset_rule(alpha: BitWord, w: CosetLabel) -> FusionElement:
    return FusionElement.single(CosetLabel(w.code, w.gamma ^ alpha.bits))


def hamming_rule(alpha: BitWord, w) -> FusionElement:
    return hamming_fuse(CosetLabel(hamming_sum(alpha.length // 8), alpha.bits), w)


def sixteenth_rule(alpha: BitWord, w: CosetLabel) -> FusionElement:
    """``V^alpha x W`` when ``V^alpha`` carries 1/16-word ``alpha``."""
    return FusionElement.single(framed(alpha, w))


# -- weights and signs -----------------------------------------------------


@dataclass(frozen=True)
class TopWeight:
    value: Fraction
    parity: str  # "integral", "half-integral" or "fractional"

    @classmethod
    def of(cls, value: Fraction) -> "TopWeight":
        frac = value - (value.numerator // value.denominator)
        parity = {Fraction(0): "integral", Fraction(1, 2): "half-integral"}.get(frac, "fractional")
        return cls(value, parity)


def sixteenth_word(x) -> BitWord:
    if isinstance(x, FrameLabel):
        return x.sixteenth_word()
    if isinstance(x, CosetLabel):
        return BitWord.zero(x.code.length)
    if isinstance(x, HammingTwisted):
        return BitWord.ones(8 * x.blocks)
    if isinstance(x, FramedLabel):
        return x.alpha
    raise FusionError(f"{type(x).__name__} has no single 1/16-word")


def top_weight(x) -> TopWeight:
    if isinstance(x, Ising):
        return TopWeight.of(x.weight)
    if isinstance(x, FrameLabel):
        return TopWeight.of(sum((c.weight for c in x.components), Fraction(0)))
    if isinstance(x, CosetLabel):
        return TopWeight.of(Fraction(coset_min_weight(x.code, x.gamma), 2))
    if isinstance(x, HammingTwisted):
        return TopWeight.of(Fraction(x.blocks, 2))
    if isinstance(x, FramedLabel):
        # each Hamming block of the cover contributes 8/16; the rest is a coset
        # of D projected away from Supp(alpha)
        code = x.base.code
        rest = full_mask(code.length) & ~x.alpha.bits
        proj = code.puncture(rest)
        low = coset_min_weight(proj, x.base.gamma & rest)
        return TopWeight.of(Fraction(x.alpha.weight, 16) + Fraction(low, 2))
    if isinstance(x, InducedLabel):
        return min((top_weight(c) for c in x.components), key=lambda t: t.value)
    raise FusionError(f"no top weight for {type(x).__name__}")


def miyamoto_tau(i: int, x) -> int:
    """First Miyamoto involution at frame coordinate ``i`` (0-based)."""
    return -1 if sixteenth_word(x)[i] else 1


def miyamoto_sigma(i: int, x) -> int:
    """Second Miyamoto involution; defined only where the component is h0 or h12."""
    if isinstance(x, FrameLabel):
        c = x.components[i]
    elif isinstance(x, Ising):
        if i != 0:
            raise IndexError(i)
        c = x
    else:
        raise FusionError(f"sigma needs a frame label, got {type(x).__name__}")
    if c is Ising.H116:
        raise FusionError("sigma is undefined on an h116 component")
    return 1 if c is Ising.H0 else -1


# -- hypothesis checks -----------------------------------------------------


@dataclass
class HypothesisI3Report:
    word_mismatches: list[BitWord]
    nonintegral: list[tuple[BitWord, Fraction]]
    missing_products: list[tuple[BitWord, BitWord]]
    multiplicities: dict[tuple[BitWord, BitWord], int]
    family_products: int = 0  # products only known up to a FramedFamily

    @property
    def passed_i(self) -> bool:
        return not self.word_mismatches

    @property
    def passed_ii(self) -> bool:
        return not self.nonintegral

    @property
    def passed_iii(self) -> bool:
        return not self.missing_products

    @property
    def passed(self) -> bool:
        return self.passed_i and self.passed_ii and self.passed_iii

    @property
    def max_multiplicity(self) -> int:
        return max(self.multiplicities.values(), default=0)

    @property
    def exactly_one(self) -> bool:
        return all(m == 1 for m in self.multiplicities.values())

    def to_json(self) -> dict:
        return {
            "3-i": self.passed_i,
            "3-ii": self.passed_ii,
            "3-iii": self.passed_iii,
            "pairs": len(self.multiplicities),
            "family_products": self.family_products,
            "min_multiplicity": min(self.multiplicities.values(), default=0),
            "max_multiplicity": self.max_multiplicity,
            "word_mismatches": [str(a) for a in self.word_mismatches],
            "nonintegral": [[str(a), str(w)] for a, w in self.nonintegral],
            "missing": [[str(a), str(b)] for a, b in self.missing_products],
            "passed": self.passed,
        }


def hypothesis_I3_check(grading: LinearCode, labels: Mapping, rule: Callable = fuse) -> HypothesisI3Report:
    """Check (3-i) 1/16-words, (3-ii) integral top weights, (3-iii) V^a x V^b contains V^(a+b)."""
    words = list(grading.codewords())
    mismatches, nonint = [], []
    for a in words:
        x = labels[a]
        if sixteenth_word(x) != a:
            mismatches.append(a)
        tw = top_weight(x)
        if tw.parity != "integral":
            nonint.append((a, tw.value))
    missing, mult, families = [], {}, 0
    for a in words:
        for b in words:
            prod = rule(labels[a], labels[b])
            families += isinstance(prod, FramedFamily)
            m = prod[labels[a + b]]
            mult[(a, b)] = m
            if m < 1:
                missing.append((a, b))
    return HypothesisI3Report(mismatches, nonint, missing, mult, families)


@dataclass
class ExtensionReport:
    grading_failures: list[tuple]
    inequivalent: bool
    parity_mode: str | None  # "vertex algebra", "superalgebra" or None
    parity_failures: list

    @property
    def passed(self) -> bool:
        return not self.grading_failures and self.inequivalent and self.parity_mode is not None

    def to_json(self) -> dict:
        return {
            "grading_failures": [[str(p) for p in f] for f in self.grading_failures],
            "inequivalent": self.inequivalent,
            "parity_mode": self.parity_mode,
            "parity_failures": [str(p) for p in self.parity_failures],
            "passed": self.passed,
        }


def extension_grading_check(d1: LinearCode, d2: LinearCode, labels: Mapping, rule: Callable = fuse) -> ExtensionReport:
    """Hypotheses of the extension theorem for a ``D1 + D2``-graded family.

    ``labels`` maps ``(alpha, beta)`` (BitWords of ``d1``, ``d2``) to labels.
    Parity is accepted either with every top weight integral, or, when ``d2``
    has dimension one, with ``(alpha, 0)`` integral and ``(alpha, 1)``
    half-integral (the super case).
    """
    keys = [(a, b) for a in d1.codewords() for b in d2.codewords()]
    fails = []
    for k1, k2 in product(keys, keys):
        target = labels[(k1[0] + k2[0], k1[1] + k2[1])]
        if rule(labels[k1], labels[k2]) != FusionElement.single(target):
            fails.append((k1, k2))
    distinct = len({labels[k] for k in keys}) == len(keys)
    weights = {k: top_weight(labels[k]).parity for k in keys}
    mode, bad = None, []
    if all(p == "integral" for p in weights.values()):
        mode = "vertex algebra"
    elif d2.dim == 1:
        bad = [k for k in keys if weights[k] != ("integral" if not k[1].bits else "half-integral")]
        if not bad:
            mode = "superalgebra"
    else:
        bad = [k for k in keys if weights[k] != "integral"]
    return ExtensionReport(fails, distinct, mode, bad)
