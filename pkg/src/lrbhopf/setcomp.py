"""Set compositions: the family ``B^n`` of ordered set partitions of ``{1..n}``."""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .lrb import BIso, CoprojectionMap, Family, FamilyError, GradeError, JIso

DEFAULT_MAX_N = 8
# grades whose full product table is materialised (|B^6|^2 ~ 2.2e7 entries)
TABLE_MAX_N = 6


@dataclass(frozen=True)
class SetComposition:
    """Ordered partition of ``{1..n}``; each block is stored sorted ascending."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block in set composition")
            if list(block) != sorted(set(block)):
                raise ValueError(f"block {block} is not sorted and duplicate-free")
            if seen & set(block):
                raise ValueError("blocks of a set composition must be disjoint")
            seen.update(block)
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError(f"blocks {self.blocks} do not partition {{1..{len(seen)}}}")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> SetComposition:
        return cls(tuple(tuple(sorted(b)) for b in blocks))

    @classmethod
    def parse(cls, text: str) -> SetComposition:
        """Parse ``"1,4|2,3|5"``; without commas each digit is one element (``"14|23|5"``)."""
        text = text.strip()
        if text in ("e", "∅", ""):
            return cls(())
        parts = text.split("|")
        try:
            if "," not in text and "0" not in text:
                blocks = [[int(ch) for ch in p.strip()] for p in parts]
            else:
                blocks = [[int(tok) for tok in p.split(",")] for p in parts]
        except ValueError:
            raise ValueError(f"malformed set composition {text!r}") from None
        if any(not b for b in blocks):
            raise ValueError(f"malformed set composition {text!r}")
        return cls.from_blocks(blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def rank(self) -> int:
        return max(len(self.blocks) - 1, 0)

    def __str__(self) -> str:
        if not self.blocks:
            return "e"
        return "|".join(",".join(str(a) for a in b) for b in self.blocks)

    def __mul__(self, other: SetComposition) -> SetComposition:
        return sc_product(self, other)

    def refines(self, other: SetComposition) -> bool:
        """True when ``self`` is a refinement of ``other`` (``other <= self``)."""
        return sc_product(other, self) == self

    def codes(self) -> list[int]:
        """Block index of each element ``1..n``."""
        out = [0] * self.n
        for i, block in enumerate(self.blocks):
            for a in block:
                out[a - 1] = i
        return out


def sc_product(F: SetComposition, H: SetComposition) -> SetComposition:
    """Blockwise intersections ``F^i ∩ H^j`` in lexicographic ``(i, j)`` order, empties deleted."""
    if F.n != H.n:
        raise ValueError(f"cannot multiply set compositions of {F.n} and {H.n}")
    out = []
    for a in F.blocks:
        sa = set(a)
        for b in H.blocks:
            common = sa.intersection(b)
            if common:
                out.append(tuple(sorted(common)))
    return SetComposition(tuple(out))


def standardize(blocks: Sequence[Iterable[int]]) -> SetComposition:
    """Relabel disjoint integer blocks order-preservingly onto ``{1..k}``."""
    blocks = [tuple(b) for b in blocks]
    union = [a for b in blocks for a in b]
    if len(set(union)) != len(union):
        raise ValueError("blocks overlap")
    if any(not b for b in blocks):
        raise ValueError("empty block")
    relabel = {a: i + 1 for i, a in enumerate(sorted(union))}
    return SetComposition.from_blocks([relabel[a] for a in b] for b in blocks)


def b_apply(F: SetComposition, H: SetComposition) -> tuple[SetComposition, ...]:
    """Lump the blocks of ``H`` inside each block of ``F`` and standardise."""
    if not H.refines(F):
        raise ValueError(f"{H} does not refine {F}")
    if not F.blocks:
        return (H,)
    out = []
    for a in F.blocks:
        sa = set(a)
        out.append(standardize([b for b in H.blocks if sa.issuperset(b)]))
    return tuple(out)


def j_apply(parts: Sequence[int], factors: Sequence[SetComposition]) -> SetComposition:
    """Place ``F_1, F_2 + f_1, F_3 + (f_1 + f_2), ...`` next to one another.

    Zero parts (whose factor must be the empty composition) are dropped first.
    """
    if len(parts) != len(factors):
        raise ValueError("number of parts and factors differ")
    blocks: list[tuple[int, ...]] = []
    shift = 0
    for p, fac in zip(parts, factors):
        if fac.n != p:
            raise ValueError(f"factor {fac} is not a composition of [{p}]")
        blocks.extend(tuple(a + shift for a in b) for b in fac.blocks)
        shift += p
    return SetComposition(tuple(blocks))


def interval_composition(parts: Sequence[int]) -> SetComposition:
    """``12..f_1 | f_1+1..f_1+f_2 | ...`` for an integer composition."""
    blocks, start = [], 1
    for p in parts:
        if p:
            blocks.append(tuple(range(start, start + p)))
            start += p
    return SetComposition(tuple(blocks))


def enumerate_set_compositions(n: int) -> list[SetComposition]:
    """All set compositions of ``{1..n}``, sorted by canonical text."""
    if n == 0:
        return [SetComposition(())]
    found: list[SetComposition] = []
    elements = list(range(1, n + 1))
    # blocks generated in order of their minima; permute block order afterwards
    partitions: list[list[tuple[int, ...]]] = []

    def gather(remaining: list[int], prefix: list[tuple[int, ...]]):
        if not remaining:
            partitions.append(list(prefix))
            return
        first, rest = remaining[0], remaining[1:]
        for k in range(len(rest) + 1):
            for others in itertools.combinations(rest, k):
                gather([a for a in rest if a not in others], prefix + [(first,) + others])

    gather(elements, [])
    for blocks in partitions:
        for perm in itertools.permutations(blocks):
            found.append(SetComposition(perm))
    found.sort(key=str)
    return found


def iota(family: SetCompFamily, f: CoprojectionMap) -> frozenset[int]:
    """Subset encoding of ``T^n``: first block of ``K`` for ``b_K``, ``∅`` for ``b^n``, ``[n]`` for ``B^n``."""
    if f.kind == "left":
        return frozenset()
    if f.kind == "right":
        return frozenset(range(1, f.n + 1))
    return frozenset(family.composition(f.n, f.K).blocks[0])


def iota_inv(family: SetCompFamily, n: int, subset: Iterable[int]) -> CoprojectionMap:
    subset = frozenset(subset)
    ground = frozenset(range(1, n + 1))
    if not subset <= ground:
        raise ValueError(f"{set(subset)} is not a subset of [{n}]")
    for f in family.t_set(n):
        if iota(family, f) == subset:
            return f
    raise FamilyError(f"no element of T^{n} encodes {sorted(subset)}")


def g_compose(family: SetCompFamily, n: int, m: int, f: CoprojectionMap, f2: CoprojectionMap) -> CoprojectionMap:
    """``(ι⁻¹(S), ι⁻¹(S')) ↦ ι⁻¹(S ∪ (S' + n))``."""
    s = iota(family, f)
    s2 = iota(family, f2)
    return iota_inv(family, n + m, s | {a + n for a in s2})


class SetCompFamily(Family):
    """The family ``{B^n}`` with its product, ``b_F`` and ``j_F``."""

    name = "setcomp"

    def __init__(self, max_n: int = DEFAULT_MAX_N, *, allow_large: bool = False):
        if max_n > DEFAULT_MAX_N and not allow_large:
            raise GradeError(f"max_n={max_n} exceeds the safety cap {DEFAULT_MAX_N}; pass allow_large")
        super().__init__(max_n)
        self._comps: dict[int, list[SetComposition]] = {}
        self._comp_index: dict[int, dict[SetComposition, int]] = {}
        self._labels: dict[int, list[str]] = {}
        self._ranks: dict[int, np.ndarray] = {}

    def compositions(self, n: int) -> list[SetComposition]:
        self.check_grade(n)
        if n not in self._comps:
            comps = enumerate_set_compositions(n)
            self._comps[n] = comps
            self._comp_index[n] = {c: i for i, c in enumerate(comps)}
            self._labels[n] = [str(c) for c in comps]
            self._ranks[n] = np.array([c.rank for c in comps], dtype=np.int64)
        return self._comps[n]

    def composition(self, n: int, x: int) -> SetComposition:
        return self.compositions(n)[x]

    def face(self, sc: SetComposition | str) -> tuple[int, int]:
        if isinstance(sc, str):
            sc = SetComposition.parse(sc)
        n = sc.n
        self.compositions(n)
        return n, self._comp_index[n][sc]

    def face_labels(self, n: int) -> list[str]:
        self.compositions(n)
        return self._labels[n]

    def ranks(self, n: int) -> np.ndarray:
        self.compositions(n)
        return self._ranks[n]

    def parse_face(self, text: str) -> tuple[int, int]:
        try:
            sc = SetComposition.parse(text)
        except ValueError as exc:
            raise FamilyError(str(exc)) from None
        if sc.n > self.max_n:
            raise GradeError(f"grade {sc.n} outside loaded range 0..{self.max_n}")
        return self.face(sc)

    def flat_text(self, n, flat) -> str:
        blocks = sorted(self.composition(n, flat.representative).blocks)
        return "".join("{" + ",".join(map(str, b)) + "}" for b in blocks)

    def parse_flat(self, text: str) -> tuple[int, int]:
        text = text.strip()
        if text in ("{}", "{e}"):
            return 0, 0
        if not (text.startswith("{") and text.endswith("}")):
            raise FamilyError(f"malformed flat label {text!r}")
        body = text[1:-1].split("}{")
        try:
            blocks = sorted(tuple(sorted(int(a) for a in b.split(","))) for b in body)
            sc = SetComposition(tuple(blocks))
        except ValueError as exc:
            raise FamilyError(f"malformed flat label {text!r}: {exc}") from None
        n, x = self.face(sc)
        return n, int(self.flat_of(n)[x])

    def codes_array(self, n: int) -> tuple[np.ndarray, np.ndarray]:
        comps = self.compositions(n)
        codes = np.array([c.codes() for c in comps], dtype=np.int64).reshape(len(comps), n)
        lookup = np.full(max(n, 1) ** n, -1, dtype=np.int32)
        powers = np.array([n**e for e in range(n)], dtype=np.int64)
        lookup[codes @ powers if n else np.zeros(1, dtype=np.int64)] = np.arange(len(comps))
        return codes, lookup

    def _build_table(self, n: int) -> np.ndarray:
        if n > TABLE_MAX_N:
            raise GradeError(f"product table for grade {n} is too large to materialise")
        codes, lookup = self.codes_array(n)
        return _kernels.setcomp_product_table(codes, lookup, n)

    def product(self, n: int, x: int, y: int) -> int:
        if n > TABLE_MAX_N:
            comps = self.compositions(n)
            return self._comp_index[n][sc_product(comps[x], comps[y])]
        return super().product(n, x, y)

    def _compute_b_iso(self, n: int, face: int) -> BIso:
        F = self.composition(n, face)
        if F.blocks:
            composition = tuple(len(b) for b in F.blocks)
        else:
            composition = (0,)
        forward = {}
        for H in self.up_set(n, face):
            parts = b_apply(F, self.composition(n, H))
            forward[H] = tuple(self.face(p)[1] for p in parts)
        backward = {v: k for k, v in forward.items()}
        return BIso(n, face, composition, forward, backward)

    def _compute_j_iso(self, n: int, parts: tuple[int, ...]) -> JIso:
        face = self.face(interval_composition(parts))[1]
        forward = {}
        for factors in itertools.product(*(range(self.size(p)) for p in parts)):
            scs = [self.composition(p, x) for p, x in zip(parts, factors)]
            forward[factors] = self.face(j_apply(parts, scs))[1]
        backward = {v: k for k, v in forward.items()}
        return JIso(n, parts, face, forward, backward)

    def closed_form_g(self, n: int, m: int) -> dict:
        return {
            (f, f2): g_compose(self, n, m, f, f2)
            for f in self.t_set(n)
            for f2 in self.t_set(m)
        }

