"""The ten graded Hopf algebras built from a family, and the four maps between them.

Main algebras (basis letter in brackets)::

    P [M]  faces              M [H]  faces
    Q [M]  pointed faces      N [H]  pointed faces
    S [F]  chamber pairs (C, D)
    R [K]  chamber pairs (D, C)

Derived algebras: ``A_L`` and ``A_Z`` [h] are the quotients of M and N by
supp and lune; ``A_L*`` and ``A_Z*`` [m] are the subspaces of P and Q spanned
by fiber sums. All coproducts are written as one sum over ``T^n`` (or
``T^n_F``), where the unit maps ``b^n`` and ``B^n`` give the ``1⊗x`` and
``x⊗1`` terms.
"""
from __future__ import annotations

import hashlib
from fractions import Fraction

import numpy as np

from .linalg import BasisMap, GradedBialgebra, Key, LinComb, UNIT_KEY
from .lrb import Family, FamilyDataError, FamilyError, PointedFace

MAIN_TAGS = ("M", "N", "P", "Q", "R", "S")
DERIVED_TAGS = ("A_L", "A_Z", "A_L*", "A_Z*")
ALGEBRA_TAGS = MAIN_TAGS + DERIVED_TAGS
MAP_NAMES = ("supp", "lune", "supp*", "lune*")
_MAP_ALIASES = {"supp_star": "supp*", "lune_star": "lune*"}


class ClosureError(FamilyDataError):
    """A sub-structure product or coproduct left the span of the fiber sums."""


class WellDefinednessError(FamilyDataError):
    """Quotient structure depends on the chosen class representative."""


def _split_pair(text: str) -> tuple[str, str]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")) or "),(" not in text.replace(" ", ""):
        raise FamilyError(f"expected '(F),(D)', got {text!r}")
    left, right = text.replace(" ", "")[1:-1].split("),(", 1)
    return left, right


class FamilyAlgebra(GradedBialgebra):
    def __init__(self, family: Family):
        super().__init__()
        self.family = family

    def _parse_face_pair(self, text: str) -> tuple[int, int, int]:
        left, right = _split_pair(text)
        n, a = self.family.parse_face(left)
        m, b = self.family.parse_face(right)
        if n != m:
            raise FamilyError(f"faces of {text!r} live in different grades")
        return n, a, b


class FaceAlgebra(FamilyAlgebra):
    """Basis indexed by faces (P and M)."""

    def dim(self, n: int) -> int:
        return self.family.size(n)

    def basis_label(self, key: Key) -> str:
        return self.family.label(*key)

    def parse_label(self, text: str) -> Key:
        return self.family.parse_face(text)


class PointedAlgebra(FamilyAlgebra):
    """Basis indexed by pointed faces (Q and N)."""

    def __init__(self, family: Family):
        super().__init__(family)
        self._index: dict[int, dict[tuple[int, int], int]] = {}

    def pointed(self, n: int) -> list[PointedFace]:
        return self.family.pointed_faces(n)

    def key_of(self, n: int, F: int, D: int) -> Key:
        if n not in self._index:
            self._index[n] = {(p.F, p.D): i for i, p in enumerate(self.pointed(n))}
        try:
            return n, self._index[n][(F, D)]
        except KeyError:
            raise FamilyDataError(
                f"({self.family.label(n, F)},{self.family.label(n, D)}) is not a pointed face", grade=n
            ) from None

    def pair(self, key: Key) -> tuple[int, int]:
        p = self.pointed(key[0])[key[1]]
        return p.F, p.D

    def dim(self, n: int) -> int:
        return len(self.pointed(n))

    def basis_label(self, key: Key) -> str:
        return self.family.pair_text(key[0], self.pair(key))

    def parse_label(self, text: str) -> Key:
        return self.key_of(*self._parse_face_pair(text))


class ChamberPairAlgebra(FamilyAlgebra):
    """Basis indexed by pairs of chambers, in label order (S: ``(C,D)``, R: ``(D,C)``)."""

    def __init__(self, family: Family):
        super().__init__(family)
        self._pairs: dict[int, list[tuple[int, int]]] = {}
        self._index: dict[int, dict[tuple[int, int], int]] = {}

    def pairs(self, n: int) -> list[tuple[int, int]]:
        if n not in self._pairs:
            ch = self.family.chambers(n)
            self._pairs[n] = [(a, b) for a in ch for b in ch]
            self._index[n] = {p: i for i, p in enumerate(self._pairs[n])}
        return self._pairs[n]

    def key_of(self, n: int, a: int, b: int) -> Key:
        self.pairs(n)
        try:
            return n, self._index[n][(a, b)]
        except KeyError:
            raise FamilyDataError("not a pair of chambers", grade=n) from None

    def dim(self, n: int) -> int:
        return len(self.pairs(n))

    def basis_label(self, key: Key) -> str:
        return self.family.pair_text(key[0], self.pairs(key[0])[key[1]])

    def parse_label(self, text: str) -> Key:
        return self.key_of(*self._parse_face_pair(text))


# -- the six main algebras ------------------------------------------------------


class AlgebraP(FaceAlgebra):
    tag, letter = "P", "M"

    def _product(self, a, b):
        (n, F1), (m, F2) = a, b
        fam = self.family
        G = fam.j_face((n, m))
        target = fam.j_apply((n, m), (F1, F2))
        hits = np.nonzero(fam.table(n + m)[G] == target)[0]
        return {(n + m, int(F)): 1 for F in hits}

    def _coproduct(self, a):
        n, F = a
        fam = self.family
        out: dict = {}
        for f in fam.t_set(n, F):
            F1, F2 = fam.coproject(f, F)
            k = ((f.grades[0], F1), (f.grades[1], F2))
            out[k] = out.get(k, 0) + 1
        return out


class AlgebraM(FaceAlgebra):
    tag, letter = "M", "H"

    def _product(self, a, b):
        (n, P1), (m, P2) = a, b
        return {(n + m, self.family.j_apply((n, m), (P1, P2))): 1}

    def _coproduct(self, a):
        n, P = a
        fam = self.family
        out: dict = {}
        for f in fam.t_set(n):
            P1, P2 = fam.hat_apply(f, P)
            k = ((f.grades[0], P1), (f.grades[1], P2))
            out[k] = out.get(k, 0) + 1
        return out


class AlgebraQ(PointedAlgebra):
    tag, letter = "Q", "M"

    def _product(self, a, b):
        (n, _), (m, _) = a, b
        F1, D1 = self.pair(a)
        F2, D2 = self.pair(b)
        fam = self.family
        N = n + m
        table = fam.table(N)
        G = fam.j_face((n, m))
        target = fam.j_apply((n, m), (F1, F2))
        D = fam.j_apply((n, m), (D1, D2))
        # second coordinate F·j_G(D_1 x D_2); see the decisions ledger
        return {self.key_of(N, int(F), int(table[F, D])): 1 for F in np.nonzero(table[G] == target)[0]}

    def _coproduct(self, a):
        n = a[0]
        F, D = self.pair(a)
        fam = self.family
        out: dict = {}
        for f in fam.t_set(n, F):
            F1, F2 = fam.coproject(f, F)
            D1, D2 = fam.coproject(f, D)
            k = (self.key_of(f.grades[0], F1, D1), self.key_of(f.grades[1], F2, D2))
            out[k] = out.get(k, 0) + 1
        return out


class AlgebraN(PointedAlgebra):
    tag, letter = "N", "H"

    def _product(self, a, b):
        (n, _), (m, _) = a, b
        P1, C1 = self.pair(a)
        P2, C2 = self.pair(b)
        fam = self.family
        return {self.key_of(n + m, fam.j_apply((n, m), (P1, P2)), fam.j_apply((n, m), (C1, C2))): 1}

    def _coproduct(self, a):
        n = a[0]
        P, C = self.pair(a)
        fam = self.family
        out: dict = {}
        for f in fam.t_set(n):
            if not fam.leq(n, fam.product(n, P, f.K), C):
                continue
            P1, P2 = fam.hat_apply(f, P)
            C1, C2 = fam.hat_apply(f, C)
            k = (self.key_of(f.grades[0], P1, C1), self.key_of(f.grades[1], P2, C2))
            out[k] = out.get(k, 0) + 1
        return out


class AlgebraS(ChamberPairAlgebra):
    """Basis ``F_(C,D)``."""

    tag, letter = "S", "F"

    def _product(self, a, b):
        (n, i), (m, j) = a, b
        C1, D1 = self.pairs(n)[i]
        C2, D2 = self.pairs(m)[j]
        fam = self.family
        N = n + m
        G = fam.j_face((n, m))
        C = fam.j_apply((n, m), (C1, C2))
        target = fam.j_apply((n, m), (D1, D2))
        table = fam.table(N)
        return {self.key_of(N, C, D): 1 for D in fam.chambers(N) if table[G, D] == target}

    def _coproduct(self, a):
        n, i = a
        C, D = self.pairs(n)[i]
        fam = self.family
        out: dict = {}
        for f in fam.t_set(n, D):
            C1, C2 = fam.hat_apply(f, C)
            D1, D2 = fam.coproject(f, D)
            k = (self.key_of(f.grades[0], C1, D1), self.key_of(f.grades[1], C2, D2))
            out[k] = out.get(k, 0) + 1
        return out


class AlgebraR(ChamberPairAlgebra):
    """Basis ``K_(D,C)``."""

    tag, letter = "R", "K"

    def _product(self, a, b):
        (n, i), (m, j) = a, b
        D1, C1 = self.pairs(n)[i]
        D2, C2 = self.pairs(m)[j]
        fam = self.family
        N = n + m
        G = fam.j_face((n, m))
        C = fam.j_apply((n, m), (C1, C2))
        target = fam.j_apply((n, m), (D1, D2))
        table = fam.table(N)
        return {self.key_of(N, D, C): 1 for D in fam.chambers(N) if table[G, D] == target}

    def _coproduct(self, a):
        n, i = a
        D, C = self.pairs(n)[i]
        fam = self.family
        out: dict = {}
        for f in fam.t_set(n, D):
            D1, D2 = fam.coproject(f, D)
            C1, C2 = fam.hat_apply(f, C)
            k = (self.key_of(f.grades[0], D1, C1), self.key_of(f.grades[1], D2, C2))
            out[k] = out.get(k, 0) + 1
        return out


# -- quotients and sub-structures ------------------------------------------------


class _ClassAlgebra(GradedBialgebra):
    """Basis indexed by classes of a parent basis (flats or lunes)."""

    letter = "h"

    def __init__(self, parent: GradedBialgebra, family: Family):
        super().__init__()
        self.parent = parent
        self.family = family
        self._members: dict[int, list[list[Key]]] = {}
        self._class_of: dict[int, dict[Key, int]] = {}

    def members(self, n: int) -> list[list[Key]]:
        """Parent keys of each class at degree ``n``."""
        if n not in self._members:
            self._members[n] = self._compute_members(n)
            self._class_of[n] = {k: c for c, ms in enumerate(self._members[n]) for k in ms}
        return self._members[n]

    def class_of(self, key: Key) -> Key:
        self.members(key[0])
        return key[0], self._class_of[key[0]][key]

    def dim(self, n: int) -> int:
        return len(self.members(n))

    def _compute_members(self, n: int) -> list[list[Key]]:
        raise NotImplementedError


class _FlatClasses:
    family: Family
    parent: FaceAlgebra

    def _compute_members(self, n):
        return [[(n, x) for x in sorted(fl.members)] for fl in self.family.flats(n)]

    def basis_label(self, key):
        return self.family.flat_text(key[0], self.family.flats(key[0])[key[1]])

    def parse_label(self, text):
        return self.family.parse_flat(text)


class _LuneClasses:
    family: Family
    parent: PointedAlgebra

    def _compute_members(self, n):
        return [[self.parent.key_of(n, p.F, p.D) for p in sorted(lu.members)] for lu in self.family.lunes(n)]

    def basis_label(self, key):
        return self.family.lune_text(key[0], self.family.lunes(key[0])[key[1]])

    def parse_label(self, text):
        n, F, D = self.parent._parse_face_pair(text)
        if not (D in self.family.chambers(n) and self.family.leq(n, F, D)):
            raise FamilyError(f"{text!r} is not a pointed face")
        return n, self.family.lune_of(n, PointedFace(F, D))


class QuotientAlgebra(_ClassAlgebra):
    """Structure computed on class representatives and pushed to classes."""

    def representative(self, key: Key) -> Key:
        return self.members(key[0])[key[1]][0]

    def project(self, x: dict, arity: int) -> dict:
        out: dict = {}
        for k, c in x.items():
            img = self.class_of(k) if arity == 1 else (self.class_of(k[0]), self.class_of(k[1]))
            out[img] = out.get(img, 0) + c
        return out

    def _product(self, a, b):
        return self.project(self.parent.product_basis(self.representative(a), self.representative(b)), 1)

    def _coproduct(self, a):
        return self.project(self.parent.coproduct_basis(self.representative(a)), 2)

    def audit(self, max_degree: int) -> int:
        """Check that every member gives the same product/coproduct; returns cases checked."""
        cases = 0
        for n in range(1, max_degree + 1):
            for c in self.basis(n):
                expect = self.coproduct_basis(c)
                for k in self.members(n)[c[1]]:
                    cases += 1
                    if _clean_dict(self.project(self.parent.coproduct_basis(k), 2)) != expect:
                        raise WellDefinednessError(
                            f"{self.tag}: coproduct depends on representative ({self.parent.key_text(k)})", grade=n
                        )
        for total in range(2, max_degree + 1):
            for n in range(1, total):
                m = total - n
                for a in self.basis(n):
                    for b in self.basis(m):
                        expect = self.product_basis(a, b)
                        for x in self.members(n)[a[1]]:
                            for y in self.members(m)[b[1]]:
                                cases += 1
                                got = _clean_dict(self.project(self.parent.product_basis(x, y), 1))
                                if got != expect:
                                    raise WellDefinednessError(
                                        f"{self.tag}: product depends on representatives "
                                        f"({self.parent.key_text(x)}, {self.parent.key_text(y)})",
                                        grade=total,
                                    )
        return cases


class SubAlgebra(_ClassAlgebra):
    """Basis ``m_X`` = sum of the parent basis over a class; structure re-expressed in it."""

    letter = "m"

    def fiber_sum(self, key: Key) -> LinComb:
        if key[0] == 0:
            return self.parent.unit()
        return LinComb(self.parent.tag, {k: 1 for k in self.members(key[0])[key[1]]})

    def express(self, x: LinComb) -> dict:
        """Coordinates of a parent element in the fiber-sum basis; raises when outside the span."""
        if x.arity == 1:
            groups: dict = {}
            for k, c in x.terms.items():
                groups.setdefault(self.class_of(k), {})[k] = c
            out = {}
            for cls, coeffs in groups.items():
                size = len(self.members(cls[0])[cls[1]])
                if len(coeffs) != size or len(set(coeffs.values())) != 1:
                    raise ClosureError(f"{self.tag}: result not constant on the fiber of "
                                       f"{self.key_text(cls)}", grade=cls[0])
                out[cls] = next(iter(coeffs.values()))
            return out
        groups = {}
        for (k1, k2), c in x.terms.items():
            groups.setdefault((self.class_of(k1), self.class_of(k2)), {})[(k1, k2)] = c
        out = {}
        for (c1, c2), coeffs in groups.items():
            size = len(self.members(c1[0])[c1[1]]) * len(self.members(c2[0])[c2[1]])
            if len(coeffs) != size or len(set(coeffs.values())) != 1:
                raise ClosureError(f"{self.tag}: coproduct not constant on the fiber of "
                                   f"{self.key_text(c1)} ⊗ {self.key_text(c2)}", grade=c1[0] + c2[0])
            out[(c1, c2)] = next(iter(coeffs.values()))
        return out

    def class_of(self, key: Key) -> Key:
        if key[0] == 0:
            return UNIT_KEY
        return super().class_of(key)

    def _product(self, a, b):
        return self.express(self.parent.multiply(self.fiber_sum(a), self.fiber_sum(b)))

    def _coproduct(self, a):
        return self.express(self.parent.coproduct(self.fiber_sum(a)))

    def audit(self, max_degree: int) -> int:
        """Compute every product and coproduct up to ``max_degree`` (raising on closure failure)."""
        cases = 0
        for total in range(1, max_degree + 1):
            for a in self.basis(total):
                self.coproduct_basis(a)
                cases += 1
            for n in range(1, total):
                for a in self.basis(n):
                    for b in self.basis(total - n):
                        self.product_basis(a, b)
                        cases += 1
        return cases


def _clean_dict(d: dict) -> dict:
    return {k: Fraction(v) for k, v in d.items() if v != 0}


class AlgebraAL(_FlatClasses, QuotientAlgebra):
    tag = "A_L"


class AlgebraAZ(_LuneClasses, QuotientAlgebra):
    tag = "A_Z"


class AlgebraALStar(_FlatClasses, SubAlgebra):
    tag = "A_L*"


class AlgebraAZStar(_LuneClasses, SubAlgebra):
    tag = "A_Z*"


# -- the diagram -----------------------------------------------------------------


class HopfDiagram:
    """Lazily built algebras and maps over one family (build once, then read)."""

    def __init__(self, family: Family):
        self.family = family
        self._algebras: dict[str, GradedBialgebra] = {}
        self._maps: dict[str, BasisMap] = {}

    def algebra(self, tag: str) -> GradedBialgebra:
        if tag not in ALGEBRA_TAGS:
            raise ValueError(f"unknown algebra {tag!r}; choose from {', '.join(ALGEBRA_TAGS)}")
        if tag not in self._algebras:
            fam = self.family
            builders = {
                "P": lambda: AlgebraP(fam),
                "M": lambda: AlgebraM(fam),
                "Q": lambda: AlgebraQ(fam),
                "N": lambda: AlgebraN(fam),
                "S": lambda: AlgebraS(fam),
                "R": lambda: AlgebraR(fam),
                "A_L": lambda: AlgebraAL(self.algebra("M"), fam),
                "A_Z": lambda: AlgebraAZ(self.algebra("N"), fam),
                "A_L*": lambda: AlgebraALStar(self.algebra("P"), fam),
                "A_Z*": lambda: AlgebraAZStar(self.algebra("Q"), fam),
            }
            self._algebras[tag] = builders[tag]()
        return self._algebras[tag]

    def map(self, name: str) -> BasisMap:
        name = _MAP_ALIASES.get(name, name)
        if name not in MAP_NAMES:
            raise ValueError(f"unknown map {name!r}; choose from {', '.join(MAP_NAMES)}")
        if name not in self._maps:
            if name == "supp":
                q = self.algebra("A_L")
                self._maps[name] = BasisMap("supp", self.algebra("M"), q, lambda k: q.element(_class_or_unit(q, k)))
            elif name == "lune":
                q = self.algebra("A_Z")
                self._maps[name] = BasisMap("lune", self.algebra("N"), q, lambda k: q.element(_class_or_unit(q, k)))
            elif name == "supp*":
                s = self.algebra("A_L*")
                self._maps[name] = BasisMap("supp*", s, self.algebra("P"), s.fiber_sum)
            else:
                s = self.algebra("A_Z*")
                self._maps[name] = BasisMap("lune*", s, self.algebra("Q"), s.fiber_sum)
        return self._maps[name]


def _class_or_unit(q: _ClassAlgebra, key: Key) -> Key:
    return UNIT_KEY if key[0] == 0 else q.class_of(key)


def dims(diagram: HopfDiagram, tag: str, max_n: int) -> list[int]:
    alg = diagram.algebra(tag)
    return [alg.dim(n) for n in range(max_n + 1)]


def family_fingerprint(family: Family, max_n: int) -> str:
    """Content hash of the family's descriptor data for grades ``0..max_n``."""
    from .table import dumps_descriptor, family_to_descriptor

    return hashlib.sha256(dumps_descriptor(family_to_descriptor(family, max_n)).encode()).hexdigest()


def structure_constants(alg: GradedBialgebra, degree: int) -> dict:
    """Nonzero structure constants in degree ``degree`` in canonical basis order.

    ``product`` lists ``[a, b, c, coefficient]`` for ``a*b`` with both factors of
    positive degree; ``coproduct`` lists ``[a, b1, b2, coefficient]``.
    """
    text = alg.key_text
    product = []
    for n in range(1, degree):
        for a in alg.basis(n):
            for b in alg.basis(degree - n):
                for c, v in sorted(alg.product_basis(a, b).items()):
                    product.append([text(a), text(b), text(c), str(v)])
    coproduct = []
    for a in alg.basis(degree):
        for (b1, b2), v in sorted(alg.coproduct_basis(a).items()):
            coproduct.append([text(a), text(b1), text(b2), str(v)])
    return {"algebra": alg.tag, "degree": degree, "product": product, "coproduct": coproduct}
