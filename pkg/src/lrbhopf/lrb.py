"""Finite left-regular band families and the structure derived from them.

A *family* supplies, for each grade ``n``, a finite set of faces with a
product, a rank function and the coprojection/injection isomorphisms used to
build the Hopf algebras. Faces are plain ``int`` indices into the grade's
canonical face list (ordered by canonical text). Everything else here (order,
chambers, flats, lunes, regions, the coprojection set ``T^n``) is derived
generically from that interface.
"""
from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from . import _kernels


class FamilyError(Exception):
    """Base class for problems with a family or its use."""


class GradeError(FamilyError, ValueError):
    """A grade outside the loaded range was requested."""


class FamilyDataError(FamilyError):
    """The family's data violates a structural requirement (corrupt tables)."""

    def __init__(self, message: str, *, grade: int | None = None, where: object = None):
        super().__init__(message)
        self.grade = grade
        self.where = where


def int_compositions(n: int) -> list[tuple[int, ...]]:
    """All compositions of ``n`` (tuples of positive parts), in lexicographic order.

    ``n = 0`` has exactly one composition, the empty one.
    """
    if n == 0:
        return [()]
    out = []
    for cuts in itertools.product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    out.sort()
    return out


def composition_key(parts: Sequence[int]) -> str:
    return "+".join(str(p) for p in parts)


def strip_zeros(parts: Sequence[int]) -> tuple[int, ...]:
    return tuple(p for p in parts if p != 0)


@dataclass(frozen=True)
class BIso:
    """Coprojection isomorphism ``b_F`` from the faces above ``F`` to a product."""

    n: int
    face: int
    composition: tuple[int, ...]
    forward: Mapping[int, tuple[int, ...]]
    backward: Mapping[tuple[int, ...], int]


@dataclass(frozen=True)
class JIso:
    """Injection isomorphism ``j_F`` from a product of grades onto the faces above ``F``."""

    n: int
    parts: tuple[int, ...]
    face: int
    forward: Mapping[tuple[int, ...], int]
    backward: Mapping[int, tuple[int, ...]]


@dataclass(frozen=True, order=True)
class PointedFace:
    F: int
    D: int


@dataclass(frozen=True)
class Flat:
    n: int
    index: int
    representative: int
    members: frozenset[int]


@dataclass(frozen=True)
class Lune:
    n: int
    index: int
    representative: PointedFace
    members: frozenset[PointedFace]


@dataclass(frozen=True)
class CoprojectionMap:
    """An element of ``T^n``: ``b_K`` for a rank-one ``K`` or one of the unit maps.

    ``kind`` is ``"K"`` for ``b_K``, ``"left"`` for ``b^n`` (image grades
    ``(0, n)``) and ``"right"`` for ``B^n`` (image grades ``(n, 0)``).
    For the unit kinds ``K`` is the minimum face of grade ``n``.
    """

    kind: str
    n: int
    K: int
    grades: tuple[int, int]


@dataclass
class LRBReport:
    n: int
    passed: bool
    pairs_checked: int
    counterexample: dict | None = None


@dataclass
class _GradeData:
    flats: list[Flat] | None = None
    flat_of: np.ndarray | None = None
    flat_order: np.ndarray | None = None
    pointed: list[PointedFace] | None = None
    lunes: list[Lune] | None = None
    lune_of: dict[PointedFace, int] | None = None
    lune_order: np.ndarray | None = None
    extra: dict = field(default_factory=dict)


class Family(ABC):
    """A graded family of finite left-regular bands with b/j isomorphism data.

    Subclasses provide the raw data; derived structure is computed lazily and
    cached (build once, then read only).
    """

    name: str = "family"

    def __init__(self, max_n: int):
        self.max_n = max_n
        self._tables: dict[int, np.ndarray] = {}
        self._label_index: dict[int, dict[str, int]] = {}
        self._b_cache: dict[tuple[int, int], BIso] = {}
        self._j_cache: dict[tuple[int, ...], JIso] = {}
        self._grade_data: dict[int, _GradeData] = {}
        self._misc: dict = {}

    # -- raw data supplied by subclasses -------------------------------------

    @abstractmethod
    def face_labels(self, n: int) -> Sequence[str]:
        """Canonical text labels of the grade-``n`` faces, in canonical order."""

    @abstractmethod
    def ranks(self, n: int) -> np.ndarray:
        """Rank of every grade-``n`` face."""

    @abstractmethod
    def _build_table(self, n: int) -> np.ndarray:
        """Full ``|Σ^n| x |Σ^n|`` product table (int32)."""

    @abstractmethod
    def _compute_b_iso(self, n: int, face: int) -> BIso: ...

    @abstractmethod
    def _compute_j_iso(self, n: int, parts: tuple[int, ...]) -> JIso: ...

    def closed_form_g(self, n: int, m: int) -> dict | None:
        """Known compatibility bijection ``T^n x T^m -> T^{n+m}``, if the family has one."""
        return None

    # -- grades, labels ------------------------------------------------------

    def check_grade(self, n: int) -> None:
        if not isinstance(n, (int, np.integer)) or n < 0 or n > self.max_n:
            raise GradeError(f"grade {n} outside loaded range 0..{self.max_n}")

    def size(self, n: int) -> int:
        return len(self.face_labels(n))

    def faces(self, n: int) -> range:
        self.check_grade(n)
        return range(self.size(n))

    def label(self, n: int, x: int) -> str:
        return self.face_labels(n)[x]

    def index(self, n: int, label: str) -> int:
        if n not in self._label_index:
            self._label_index[n] = {s: i for i, s in enumerate(self.face_labels(n))}
        try:
            return self._label_index[n][label]
        except KeyError:
            raise FamilyError(f"no face {label!r} at grade {n}") from None

    def parse_face(self, text: str) -> tuple[int, int]:
        """Resolve a face label to ``(grade, index)``."""
        text = text.strip()
        for n in range(self.max_n + 1):
            try:
                return n, self.index(n, text)
            except FamilyError:
                continue
        raise FamilyError(f"unknown face label {text!r}")

    def pair_text(self, n: int, pf: PointedFace | tuple[int, int]) -> str:
        a, b = pf if isinstance(pf, tuple) else (pf.F, pf.D)
        return f"({self.label(n, a)}),({self.label(n, b)})"

    def flat_text(self, n: int, flat: Flat) -> str:
        return "{" + self.label(n, flat.representative) + "}"

    def parse_flat(self, text: str) -> tuple[int, int]:
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise FamilyError(f"malformed flat label {text!r}")
        n, x = self.parse_face(text[1:-1])
        return n, int(self.flat_of(n)[x])

    # -- product and order ---------------------------------------------------

    def table(self, n: int) -> np.ndarray:
        self.check_grade(n)
        if n not in self._tables:
            self._tables[n] = np.ascontiguousarray(self._build_table(n), dtype=np.int32)
        return self._tables[n]

    def product(self, n: int, x: int, y: int) -> int:
        return int(self.table(n)[x, y])

    def rank(self, n: int, x: int) -> int:
        return int(self.ranks(n)[x])

    def degree(self, n: int, x: int) -> int:
        return self.rank(n, x) + 1

    def empty(self, n: int) -> int:
        key = ("empty", n)
        if key not in self._misc:
            zeros = np.nonzero(self.ranks(n) == 0)[0]
            if len(zeros) != 1:
                raise FamilyDataError(f"grade {n} has {len(zeros)} rank-0 faces", grade=n)
            self._misc[key] = int(zeros[0])
        return self._misc[key]

    def leq_matrix(self, n: int) -> np.ndarray:
        key = ("leq", n)
        if key not in self._misc:
            t = self.table(n)
            self._misc[key] = t == np.arange(t.shape[0])[None, :]
        return self._misc[key]

    def leq(self, n: int, x: int, y: int) -> bool:
        return self.product(n, x, y) == y

    def up_set(self, n: int, x: int) -> list[int]:
        """``Σ^n_x``: faces ``y`` with ``x <= y``, in canonical order."""
        return [int(y) for y in np.nonzero(self.leq_matrix(n)[x])[0]]

    def chambers(self, n: int) -> list[int]:
        key = ("chambers", n)
        if key not in self._misc:
            top = max(n - 1, 0)
            self._misc[key] = [int(x) for x in np.nonzero(self.ranks(n) == top)[0]]
        return self._misc[key]

    def rank_one(self, n: int) -> list[int]:
        key = ("rank1", n)
        if key not in self._misc:
            self._misc[key] = [int(x) for x in np.nonzero(self.ranks(n) == 1)[0]]
        return self._misc[key]

    # -- b / j isomorphisms ---------------------------------------------------

    def b_iso(self, n: int, face: int) -> BIso:
        key = (n, face)
        if key not in self._b_cache:
            self.check_grade(n)
            self._b_cache[key] = self._compute_b_iso(n, face)
        return self._b_cache[key]

    def j_iso(self, parts: Sequence[int]) -> JIso:
        """Injection for a composition; zero parts are dropped first."""
        key = strip_zeros(parts)
        if key not in self._j_cache:
            n = sum(key)
            self.check_grade(n)
            self._j_cache[key] = self._compute_j_iso(n, key)
        return self._j_cache[key]

    def j_face(self, parts: Sequence[int]) -> int:
        return self.j_iso(parts).face

    def j_apply(self, parts: Sequence[int], factors: Sequence[int]) -> int:
        """``j_F`` applied to a factor tuple; grade-0 factors are projected away."""
        kept = tuple(f for p, f in zip(parts, factors) if p != 0)
        return self.j_iso(parts).forward[kept]

    # -- T^n -----------------------------------------------------------------

    def t_set(self, n: int, face: int | None = None) -> list[CoprojectionMap]:
        self.check_grade(n)
        key = ("T", n)
        if key not in self._misc:
            e = self.empty(n)
            if n == 0:
                maps = [CoprojectionMap("left", 0, e, (0, 0))]
            else:
                maps = []
                for K in self.rank_one(n):
                    comp = self.b_iso(n, K).composition
                    maps.append(CoprojectionMap("K", n, K, (comp[0], comp[1])))
                maps.append(CoprojectionMap("left", n, e, (0, n)))
                maps.append(CoprojectionMap("right", n, e, (n, 0)))
            self._misc[key] = maps
        maps = self._misc[key]
        if face is None:
            return list(maps)
        return [f for f in maps if self.leq(n, f.K, face)]

    def coproject(self, f: CoprojectionMap, P: int) -> tuple[int, int]:
        """``f(P)`` for ``P`` above ``K_f``."""
        if f.kind == "left":
            return 0, P
        if f.kind == "right":
            return P, 0
        image = self.b_iso(f.n, f.K).forward.get(P)
        if image is None:
            raise FamilyDataError(
                f"b_{self.label(f.n, f.K)} undefined on {self.label(f.n, P)}", grade=f.n
            )
        return image[0], image[1]

    def coproject_inverse(self, f: CoprojectionMap, pair: tuple[int, int]) -> int:
        if f.kind == "left":
            return pair[1]
        if f.kind == "right":
            return pair[0]
        return self.b_iso(f.n, f.K).backward[tuple(pair)]

    def hat_apply(self, f: CoprojectionMap, P: int) -> tuple[int, int]:
        """``f̂(P) = f(K_f P)``."""
        return self.coproject(f, self.product(f.n, f.K, P))

    def t_text(self, f: CoprojectionMap) -> str:
        if f.kind == "left":
            return f"b^{f.n}"
        if f.kind == "right":
            return f"B^{f.n}"
        return f"b_{{{self.label(f.n, f.K)}}}"

    # -- flats ---------------------------------------------------------------

    def _gd(self, n: int) -> _GradeData:
        self.check_grade(n)
        return self._grade_data.setdefault(n, _GradeData())

    def supp_classes(self, n: int) -> tuple[list[Flat], np.ndarray]:
        """Flats of grade ``n`` and their partial order (``order[X, Y]`` iff ``X <= Y``)."""
        gd = self._gd(n)
        if gd.flats is None:
            t = self.table(n)
            size = t.shape[0]
            # pre[x, y] iff x ⪯ y iff yx = y
            pre = t.T == np.arange(size)[None, :]
            classes, of = _partition(pre & pre.T)
            quotient = pre[np.ix_([c[0] for c in classes], [c[0] for c in classes])]
            _check_quotient(pre, of, quotient, n, "⪯ on faces")
            gd.flats = [Flat(n, i, c[0], frozenset(c)) for i, c in enumerate(classes)]
            gd.flat_of = of
            gd.flat_order = quotient
        return gd.flats, gd.flat_order

    def flats(self, n: int) -> list[Flat]:
        return self.supp_classes(n)[0]

    def flat_of(self, n: int) -> np.ndarray:
        self.supp_classes(n)
        return self._gd(n).flat_of

    # -- pointed faces and lunes ---------------------------------------------

    def pointed_faces(self, n: int) -> list[PointedFace]:
        gd = self._gd(n)
        if gd.pointed is None:
            leq = self.leq_matrix(n)
            cs = self.chambers(n)
            gd.pointed = sorted(
                PointedFace(x, c) for x in range(leq.shape[0]) for c in cs if leq[x, c]
            )
        return gd.pointed

    def lune_classes(self, n: int) -> tuple[list[Lune], np.ndarray]:
        gd = self._gd(n)
        if gd.lunes is None:
            t = self.table(n)
            pts = self.pointed_faces(n)
            xs = np.array([p.F for p in pts], dtype=np.int64)
            cs = np.array([p.D for p in pts], dtype=np.int64)
            # pre[i, j] iff (x_i, c_i) ⪯ (y_j, d_j) iff y x = y and y c = d
            pre = (t[xs[None, :], xs[:, None]] == xs[None, :]) & (
                t[xs[None, :], cs[:, None]] == cs[None, :]
            )
            classes, of = _partition(pre & pre.T)
            reps = [c[0] for c in classes]
            quotient = pre[np.ix_(reps, reps)]
            _check_quotient(pre, of, quotient, n, "⪯ on pointed faces")
            gd.lunes = [
                Lune(n, i, pts[c[0]], frozenset(pts[k] for k in c))
                for i, c in enumerate(classes)
            ]
            gd.lune_of = {pts[k]: int(of[k]) for k in range(len(pts))}
            gd.lune_order = quotient
        return gd.lunes, gd.lune_order

    def lunes(self, n: int) -> list[Lune]:
        return self.lune_classes(n)[0]

    def lune_of(self, n: int, pf: PointedFace) -> int:
        self.lune_classes(n)
        return self._gd(n).lune_of[pf]

    def lune_text(self, n: int, lune: Lune) -> str:
        return self.pair_text(n, lune.representative)

    # -- regions and zones ---------------------------------------------------

    def reg(self, n: int, x: int, c: int) -> frozenset[int]:
        """``{y : xy <= c}`` for a pointed face ``(x, c)``."""
        if not (c in self.chambers(n) and self.leq(n, x, c)):
            raise FamilyError(f"({x}, {c}) is not a pointed face at grade {n}")
        t = self.table(n)
        leq = self.leq_matrix(n)
        return frozenset(int(y) for y in np.nonzero(leq[t[x], c])[0])

    def zone_classes(self, n: int) -> list[tuple[frozenset[int], list[int]]]:
        """Lunes grouped by their common region: ``[(region, [lune index, ...]), ...]``."""
        groups: dict[frozenset[int], list[int]] = {}
        for lune in self.lunes(n):
            rep = lune.representative
            groups.setdefault(self.reg(n, rep.F, rep.D), []).append(lune.index)
        return sorted(groups.items(), key=lambda kv: kv[1][0])

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} max_n={self.max_n}>"


def _partition(eq: np.ndarray) -> tuple[list[list[int]], np.ndarray]:
    size = eq.shape[0]
    of = np.full(size, -1, dtype=np.int64)
    classes: list[list[int]] = []
    for x in range(size):
        if of[x] >= 0:
            continue
        members = [int(y) for y in np.nonzero(eq[x])[0]]
        if x not in members or any(of[y] >= 0 for y in members):
            raise FamilyDataError("equivalence classes overlap (relation not transitive)")
        of[members] = len(classes)
        classes.append(members)
    return classes, of


def _check_quotient(pre: np.ndarray, of: np.ndarray, quotient: np.ndarray, n: int, what: str) -> None:
    # pre must be constant on class blocks, and the quotient relation transitive.
    if not np.array_equal(pre, quotient[np.ix_(of, of)]):
        raise FamilyDataError(f"{what} is not transitive at grade {n}", grade=n)
    q = quotient.astype(np.int64)
    if np.any(((q @ q) > 0) & ~quotient):
        raise FamilyDataError(f"{what} is not transitive at grade {n}", grade=n)


def is_lrb(family: Family, n: int) -> LRBReport:
    """Check ``xx = x`` and ``xyx = xy`` for every pair of grade-``n`` faces."""
    family.check_grade(n)
    t = family.table(n)
    kind, x, y = _kernels.lrb_violation(t)
    pairs = int(t.shape[0]) ** 2
    if kind == _kernels.NO_VIOLATION:
        return LRBReport(n, True, pairs)
    if kind == _kernels.IDEMPOTENCY:
        ce = {"law": "xx = x", "x": family.label(n, x), "xx": family.label(n, int(t[x, x]))}
    else:
        xy = int(t[x, y])
        ce = {
            "law": "xyx = xy",
            "x": family.label(n, x),
            "y": family.label(n, y),
            "xy": family.label(n, xy),
            "xyx": family.label(n, int(t[xy, x])),
        }
    return LRBReport(n, False, pairs, ce)


def leq(family: Family, n: int, x: int, y: int) -> bool:
    return family.leq(n, x, y)


def chambers(family: Family, n: int) -> list[int]:
    return family.chambers(n)


def supp_classes(family: Family, n: int) -> tuple[list[Flat], np.ndarray]:
    return family.supp_classes(n)


def lune_classes(family: Family, n: int) -> tuple[list[Lune], np.ndarray]:
    return family.lune_classes(n)


def reg(family: Family, n: int, x: int, c: int) -> frozenset[int]:
    return family.reg(n, x, c)


def t_set(family: Family, n: int, face: int | None = None) -> list[CoprojectionMap]:
    return family.t_set(n, face)


def hat_apply(family: Family, f: CoprojectionMap, P: int) -> tuple[int, int]:
    return family.hat_apply(f, P)


def iter_product(family: Family, grades: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All tuples of faces in ``Σ^{g_1} x ... x Σ^{g_k}``."""
    return itertools.product(*(family.faces(g) for g in grades))
