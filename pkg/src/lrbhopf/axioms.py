"""Exhaustive checkers for the coalgebra, algebra and compatibility axioms.

Every checker walks its case space in canonical order and stops at the first
failure, so a failed report always carries a reproducible counterexample.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .lrb import CoprojectionMap, Family, FamilyError, int_compositions


@dataclass
class AxiomReport:
    axiom: str
    grades: tuple[int, ...]
    passed: bool = True
    cases: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict, repr=False)

    def fail(self, **counterexample) -> AxiomReport:
        self.passed = False
        self.counterexample = counterexample
        return self

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "grades": list(self.grades),
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        grades = ",".join(str(g) for g in self.grades)
        line = f"{status}  {self.axiom:<6} grades=({grades}) cases={self.cases}"
        if self.counterexample:
            detail = "; ".join(f"{k}={v}" for k, v in self.counterexample.items())
            line += f"\n      counterexample: {detail}"
        for note in self.notes:
            line += f"\n      note: {note}"
        return line


def _faces_text(family: Family, grades, faces) -> str:
    return " x ".join(family.label(g, x) for g, x in zip(grades, faces))


def _componentwise_leq(family: Family, grades, images: np.ndarray) -> np.ndarray:
    rel = np.ones((images.shape[0], images.shape[0]), dtype=bool)
    for i, g in enumerate(grades):
        col = images[:, i]
        rel &= family.leq_matrix(g)[col[:, None], col[None, :]]
    return rel


def _componentwise_product(family: Family, grades, images: np.ndarray) -> np.ndarray:
    out = np.empty((images.shape[0], images.shape[0], len(grades)), dtype=np.int64)
    for i, g in enumerate(grades):
        col = images[:, i]
        out[:, :, i] = family.table(g)[col[:, None], col[None, :]]
    return out


# -- coalgebra axioms --------------------------------------------------------


def check_C1(family: Family, n: int) -> AxiomReport:
    """Each ``b_F`` is a poset isomorphism ``Σ^n_F -> Σ^{f_1} x ... x Σ^{f_deg F}``."""
    rep = AxiomReport("C1", (n,))
    empty = family.empty(n)
    for F in family.faces(n):
        rep.cases += 1
        label = family.label(n, F)
        iso = family.b_iso(n, F)
        comp = iso.composition
        if len(comp) != family.degree(n, F) or sum(comp) != n:
            return rep.fail(face=label, reason=f"composition {comp} invalid for degree {family.degree(n, F)}")
        if n > 0 and min(comp) < 1:
            return rep.fail(face=label, reason=f"composition {comp} has a zero part")
        domain = family.up_set(n, F)
        if sorted(iso.forward) != domain:
            return rep.fail(face=label, reason="domain differs from the faces above F")
        images = np.array([iso.forward[H] for H in domain], dtype=np.int64).reshape(len(domain), len(comp))
        for i, g in enumerate(comp):
            if images[:, i].min() < 0 or images[:, i].max() >= family.size(g):
                return rep.fail(face=label, reason=f"factor {i} out of range")
        expected = int(np.prod([family.size(g) for g in comp]))
        if len(set(map(tuple, images.tolist()))) != len(domain) or len(domain) != expected:
            return rep.fail(face=label, reason="not a bijection onto the product")
        if F == empty and (comp != (n,) or any(iso.forward[H] != (H,) for H in domain)):
            return rep.fail(face=label, reason="b of the minimum face is not the identity")
        src = family.leq_matrix(n)[np.ix_(domain, domain)]
        dst = _componentwise_leq(family, comp, images)
        bad = np.argwhere(src != dst)
        if bad.size:
            a, b = (domain[k] for k in bad[0])
            return rep.fail(
                face=label,
                reason="order not preserved in both directions",
                H=family.label(n, a),
                N=family.label(n, b),
            )
    return rep


def check_C2(family: Family, n: int) -> AxiomReport:
    """``b_F = (b_{F_1} x ... x b_{F_m}) ∘ b_K`` for ``K <= F``, with concatenated compositions."""
    rep = AxiomReport("C2", (n,))
    leq = family.leq_matrix(n)
    for F in family.faces(n):
        bF = family.b_iso(n, F)
        for K in family.faces(n):
            if not leq[K, F]:
                continue
            rep.cases += 1
            bK = family.b_iso(n, K)
            parts = bK.forward[F]
            inner = [family.b_iso(g, x) for g, x in zip(bK.composition, parts)]
            concat = tuple(p for iso in inner for p in iso.composition)
            if n > 0:
                concat = tuple(p for p in concat if p != 0) or concat
            if concat != bF.composition:
                return rep.fail(
                    K=family.label(n, K),
                    F=family.label(n, F),
                    reason=f"concatenated composition {concat} != {bF.composition}",
                )
            for H in family.up_set(n, F):
                mid = bK.forward[H]
                try:
                    rhs = tuple(v for iso, x in zip(inner, mid) for v in iso.forward[x])
                except KeyError:
                    return rep.fail(K=family.label(n, K), F=family.label(n, F), H=family.label(n, H),
                                    reason="b_K(H) does not lie above b_K(F)")
                if n > 0:
                    rhs = tuple(v for v, iso in zip(rhs, _flat_parts(inner)) if iso != 0)
                if rhs != bF.forward[H]:
                    return rep.fail(
                        K=family.label(n, K),
                        F=family.label(n, F),
                        H=family.label(n, H),
                        reason="factorisation differs",
                    )
    return rep


def _flat_parts(inner) -> list[int]:
    return [p for iso in inner for p in iso.composition]


def check_C3(family: Family, n: int) -> AxiomReport:
    """Every rank-2 face has exactly two rank-1 faces with the prescribed image shapes."""
    rep = AxiomReport("C3", (n,))
    leq = family.leq_matrix(n)
    ranks = family.ranks(n)
    for H in family.faces(n):
        if ranks[H] != 2:
            continue
        rep.cases += 1
        below = [K for K in family.rank_one(n) if leq[K, H]]
        if len(below) != 2:
            return rep.fail(H=family.label(n, H), rank_one_faces=[family.label(n, K) for K in below],
                            reason=f"{len(below)} rank-1 faces instead of 2")
        shapes = set()
        for K in below:
            (k1, k2), (a, b) = family.b_iso(n, K).composition, family.b_iso(n, K).forward[H]
            if a == family.empty(k1) and family.rank(k2, b) == 1:
                shapes.add("empty x rank1")
            elif family.rank(k1, a) == 1 and b == family.empty(k2):
                shapes.add("rank1 x empty")
        if shapes != {"empty x rank1", "rank1 x empty"}:
            return rep.fail(H=family.label(n, H), shapes=sorted(shapes),
                            reason="images of H under the two coprojections have the wrong shape")
    if rep.cases == 0:
        rep.notes.append("no rank-2 faces (vacuous)")
    return rep


def check_CP(family: Family, n: int) -> AxiomReport:
    """``b_F(HN) = b_F(H) b_F(N)`` for ``F <= H, N``."""
    rep = AxiomReport("CP", (n,))
    table = family.table(n)
    for F in family.faces(n):
        iso = family.b_iso(n, F)
        domain = family.up_set(n, F)
        rep.cases += len(domain) ** 2
        images = np.array([iso.forward[H] for H in domain], dtype=np.int64).reshape(len(domain), -1)
        position = np.full(family.size(n), -1, dtype=np.int64)
        position[domain] = np.arange(len(domain))
        local = position[table[np.ix_(domain, domain)]]
        if (local < 0).any():
            a, b = np.argwhere(local < 0)[0]
            return rep.fail(F=family.label(n, F), H=family.label(n, domain[a]), N=family.label(n, domain[b]),
                            reason="HN not above F")
        lhs = images[local]
        rhs = _componentwise_product(family, iso.composition, images)
        bad = np.argwhere((lhs != rhs).any(axis=2))
        if bad.size:
            a, b = bad[0]
            return rep.fail(F=family.label(n, F), H=family.label(n, domain[a]), N=family.label(n, domain[b]),
                            reason="b_F(HN) != b_F(H) b_F(N)")
    return rep


# -- algebra axioms -------------------------------------------------------------


def check_A1(family: Family, n: int) -> AxiomReport:
    """Each composition has a face ``F`` of matching degree and a poset isomorphism ``j_F``."""
    rep = AxiomReport("A1", (n,))
    seen: dict[int, tuple[int, ...]] = {}
    for parts in int_compositions(n):
        rep.cases += 1
        key = "+".join(map(str, parts))
        try:
            iso = family.j_iso(parts)
        except FamilyError as exc:
            return rep.fail(composition=key, reason=str(exc))
        F = iso.face
        if F in seen:
            return rep.fail(composition=key, other="+".join(map(str, seen[F])), face=family.label(n, F),
                            reason="two compositions give the same face")
        seen[F] = parts
        if n > 0 and family.degree(n, F) != len(parts):
            return rep.fail(composition=key, face=family.label(n, F), reason="degree differs from number of parts")
        if parts == (n,) and n > 0:
            if F != family.empty(n) or any(iso.forward[(x,)] != x for x in family.faces(n)):
                return rep.fail(composition=key, reason="j for (n) is not the identity on Σ^n")
        domain = sorted(itertools.product(*(family.faces(p) for p in parts)))
        if sorted(iso.forward) != domain:
            return rep.fail(composition=key, reason="domain is not the product of the grades")
        images = [iso.forward[x] for x in domain]
        if sorted(images) != family.up_set(n, F):
            return rep.fail(composition=key, face=family.label(n, F), reason="not a bijection onto Σ^n_F")
        src = np.array(domain, dtype=np.int64).reshape(len(domain), len(parts))
        rel_src = _componentwise_leq(family, parts, src)
        rel_dst = family.leq_matrix(n)[np.ix_(images, images)]
        bad = np.argwhere(rel_src != rel_dst)
        if bad.size:
            a, b = bad[0]
            return rep.fail(composition=key, x=_faces_text(family, parts, domain[a]),
                            y=_faces_text(family, parts, domain[b]), reason="order not preserved")
    return rep


def check_A2(family: Family, n: int) -> AxiomReport:
    """``j_F = j_G ∘ (j_{F_1} x ... x j_{F_m})`` for refinements, and ``F = F'``."""
    rep = AxiomReport("A2", (n,))
    for outer in int_compositions(n):
        G = family.j_iso(outer)
        for inner in itertools.product(*(int_compositions(g) for g in outer)):
            rep.cases += 1
            inner_isos = [family.j_iso(c) for c in inner]
            F_prime = G.forward[tuple(iso.face for iso in inner_isos)]
            concat = tuple(p for c in inner for p in c)
            jF = family.j_iso(concat)
            where = {"outer": "+".join(map(str, outer)), "inner": " / ".join("+".join(map(str, c)) for c in inner)}
            if jF.face != F_prime:
                return rep.fail(**where, reason="F != F'", F=family.label(n, jF.face), F_prime=family.label(n, F_prime))
            for x, image in jF.forward.items():
                chunks, pos = [], 0
                for iso in inner_isos:
                    width = len(iso.parts)
                    chunks.append(iso.forward[x[pos:pos + width]])
                    pos += width
                if G.forward[tuple(chunks)] != image:
                    return rep.fail(**where, x=_faces_text(family, concat, x), reason="factorisation differs")
    return rep


def check_AP(family: Family, n: int) -> AxiomReport:
    """``j_F⁻¹(HN) = j_F⁻¹(H) j_F⁻¹(N)`` for ``F <= H, N``."""
    rep = AxiomReport("AP", (n,))
    table = family.table(n)
    for parts in int_compositions(n):
        iso = family.j_iso(parts)
        domain = family.up_set(n, iso.face)
        rep.cases += len(domain) ** 2
        images = np.array([iso.backward[H] for H in domain], dtype=np.int64).reshape(len(domain), len(parts))
        position = np.full(family.size(n), -1, dtype=np.int64)
        position[domain] = np.arange(len(domain))
        local = position[table[np.ix_(domain, domain)]]
        lhs = images[local]
        rhs = _componentwise_product(family, parts, images)
        bad = np.argwhere((lhs != rhs).any(axis=2))
        if bad.size:
            a, b = bad[0]
            return rep.fail(composition="+".join(map(str, parts)), H=family.label(n, domain[a]),
                            N=family.label(n, domain[b]), reason="j_F⁻¹(HN) != j_F⁻¹(H) j_F⁻¹(N)")
    return rep


# -- compatibility axioms ------------------------------------------------------


def _b1_candidates(family: Family, n: int, m: int, f: CoprojectionMap, f2: CoprojectionMap) -> list[CoprojectionMap]:
    G = family.j_face((n, m))
    target = family.j_apply((n, m), (f.K, f2.K))
    grades = (f.grades[0] + f2.grades[0], f.grades[1] + f2.grades[1])
    table = family.table(n + m)
    return [h for h in family.t_set(n + m) if h.grades == grades and table[G, h.K] == target]


def _b2_failure(family: Family, n: int, m: int, f, f2, f3) -> dict | None:
    """First ``(P, P')`` where the compatibility square fails for ``f3 = g(f, f2)``."""
    (n1, n2), (m1, m2) = f.grades, f2.grades
    hat1 = {P: family.hat_apply(f, P) for P in family.faces(n)}
    hat2 = {P: family.hat_apply(f2, P) for P in family.faces(m)}
    for P in family.faces(n):
        P1, P2 = hat1[P]
        for Q in family.faces(m):
            Q1, Q2 = hat2[Q]
            lhs = family.hat_apply(f3, family.j_apply((n, m), (P, Q)))
            rhs = (family.j_apply((n1, m1), (P1, Q1)), family.j_apply((n2, m2), (P2, Q2)))
            if lhs != rhs:
                return {"P": family.label(n, P), "P'": family.label(m, Q),
                        "lhs": _faces_text(family, (n1 + m1, n2 + m2), lhs),
                        "rhs": _faces_text(family, (n1 + m1, n2 + m2), rhs)}
    return None


def check_B1(family: Family, n: int, m: int, *, require_unique: bool = True) -> AxiomReport:
    """Search ``T^{n+m}`` for the map ``g_{n,m}(f, f')`` fixed by the two B1 conditions.

    With ``require_unique`` (the default) a pair with several candidates fails
    the family. The report's ``data["g"]`` holds the uniquely determined
    values and ``data["candidates"]`` every candidate list.
    """
    rep = AxiomReport("B1", (n, m))
    candidates = {}
    for f in family.t_set(n):
        for f2 in family.t_set(m):
            rep.cases += 1
            candidates[(f, f2)] = _b1_candidates(family, n, m, f, f2)
    rep.data["candidates"] = candidates
    rep.data["g"] = {k: v[0] for k, v in candidates.items() if len(v) == 1}
    for (f, f2), cands in candidates.items():
        if not cands:
            return rep.fail(f=family.t_text(f), f_prime=family.t_text(f2), reason="no candidate in T^{n+m}")
    ambiguous = [(k, v) for k, v in candidates.items() if len(v) > 1]
    for (f, f2), cands in ambiguous:
        survivors = [h for h in cands if _b2_failure(family, n, m, f, f2, h) is None]
        rep.notes.append(
            f"({family.t_text(f)}, {family.t_text(f2)}) has candidates "
            f"{[family.t_text(h) for h in cands]}; "
            f"{[family.t_text(h) for h in survivors]} also satisfy B2"
        )
    if ambiguous and require_unique:
        (f, f2), cands = ambiguous[0]
        return rep.fail(f=family.t_text(f), f_prime=family.t_text(f2),
                        candidates=[family.t_text(h) for h in cands], reason="f'' is not unique")
    if not _has_bijection(candidates, family.t_set(n + m)):
        return rep.fail(reason="no bijection T^n x T^m -> T^{n+m} among the candidates")
    return rep


def _has_bijection(candidates: dict, targets: list) -> bool:
    if len(candidates) != len(targets):
        return False
    return _match(candidates) is not None


def _match(candidates: dict) -> dict | None:
    """Deterministic perfect matching of pairs to candidates (canonical order first)."""
    keys = sorted(candidates, key=lambda k: len(candidates[k]))
    chosen: dict = {}
    used: set = set()

    def go(i: int) -> bool:
        if i == len(keys):
            return True
        for h in candidates[keys[i]]:
            if h not in used:
                used.add(h)
                chosen[keys[i]] = h
                if go(i + 1):
                    return True
                used.discard(h)
                del chosen[keys[i]]
        return False

    return dict(chosen) if go(0) else None


def resolve_g(family: Family, n: int, m: int) -> dict | None:
    """A bijection ``T^n x T^m -> T^{n+m}`` satisfying B1 and B2, if one exists.

    Candidates from the B1 conditions are filtered by the B2 square; remaining
    ties are broken by a deterministic matching.
    """
    candidates = {}
    for f in family.t_set(n):
        for f2 in family.t_set(m):
            cands = _b1_candidates(family, n, m, f, f2)
            if len(cands) > 1:
                cands = [h for h in cands if _b2_failure(family, n, m, f, f2, h) is None] or cands
            candidates[(f, f2)] = cands
    if len(candidates) != len(family.t_set(n + m)):
        return None
    return _match(candidates)


def check_B2(family: Family, n: int, m: int, g: dict) -> AxiomReport:
    """``f̂'' ∘ j_G = (j_{G_1} x j_{G_2}) ∘ (id x τ x id) ∘ (f̂ x f̂')`` for every pair in ``g``."""
    rep = AxiomReport("B2", (n, m))
    G = family.j_face((n, m))
    for f in family.t_set(n):
        for f2 in family.t_set(m):
            f3 = g.get((f, f2))
            if f3 is None:
                return rep.fail(f=family.t_text(f), f_prime=family.t_text(f2), reason="g undefined on this pair")
            rep.cases += family.size(n) * family.size(m)
            (n1, n2), (m1, m2) = f.grades, f2.grades
            G1 = family.j_face((n1, m1))
            G2 = family.j_face((n2, m2))
            if family.hat_apply(f3, G) != (G1, G2):
                return rep.fail(f=family.t_text(f), f_prime=family.t_text(f2), reason="f''^(G) != G_1 x G_2")
            bad = _b2_failure(family, n, m, f, f2, f3)
            if bad is not None:
                return rep.fail(f=family.t_text(f), f_prime=family.t_text(f2), g=family.t_text(f3), **bad)
    return rep


def check_varpi_bijection(family: Family, n: int, m: int, g: dict) -> AxiomReport:
    """The map ``(f, f', F̃_1, F̃_2) ↦ ((f'')⁻¹(F̃_1 x F̃_2), f'')`` is a bijection ``L -> R``."""
    rep = AxiomReport("varpi", (n, m))
    N = n + m
    G = family.j_face((n, m))
    table_N = family.table(N)
    t_N = family.t_set(N)
    for F in family.faces(n):
        for F2 in family.faces(m):
            rep.cases += 1
            where = {"F": family.label(n, F), "F'": family.label(m, F2)}
            target = family.j_apply((n, m), (F, F2))
            R = {
                (Ft, h)
                for Ft in family.faces(N)
                if table_N[G, Ft] == target
                for h in t_N
                if family.leq(N, h.K, Ft)
            }
            L = []
            for f in family.t_set(n, F):
                F1, F2_ = family.coproject(f, F)
                for f2 in family.t_set(m, F2):
                    Q1, Q2 = family.coproject(f2, F2)
                    sides = []
                    for (a, b), (x, y) in zip(zip(f.grades, f2.grades), ((F1, Q1), (F2_, Q2))):
                        Gi = family.j_face((a, b))
                        ti = family.j_apply((a, b), (x, y))
                        tab = family.table(a + b)
                        sides.append([z for z in family.faces(a + b) if tab[Gi, z] == ti])
                    L.extend((f, f2, z1, z2) for z1 in sides[0] for z2 in sides[1])
            images = set()
            for f, f2, z1, z2 in L:
                h = g.get((f, f2))
                if h is None:
                    return rep.fail(**where, reason="g undefined on a pair")
                try:
                    Ft = family.coproject_inverse(h, (z1, z2))
                except KeyError:
                    return rep.fail(**where, f=family.t_text(f), f_prime=family.t_text(f2), reason="F̃_1 x F̃_2 outside image of f''")
                if (Ft, h) not in R:
                    return rep.fail(**where, f=family.t_text(f), f_prime=family.t_text(f2),
                                    F_tilde=family.label(N, Ft), reason="image not in R")
                images.add((Ft, h))
            if len(images) != len(L):
                return rep.fail(**where, reason="varpi not injective")
            if len(L) != len(R):
                return rep.fail(**where, L=len(L), R=len(R), reason="|L| != |R|")
    return rep


COALGEBRA = (check_C1, check_C2, check_C3, check_CP)
ALGEBRA = (check_A1, check_A2, check_AP)


def g_for(family: Family, n: int, m: int) -> dict | None:
    """The compatibility bijection used by B2 / varpi: closed form if known, else resolved."""
    closed = family.closed_form_g(n, m)
    return closed if closed is not None else resolve_g(family, n, m)


def run_axiom_suite(family: Family, max_n: int, *, require_unique_g: bool = True,
                    varpi_max: int | None = None) -> list[AxiomReport]:
    """All checkers: C*/A* for grades ``<= max_n``, B1/B2/varpi for ``n + m <= max_n``."""
    reports: list[AxiomReport] = []
    for n in range(max_n + 1):
        for check in COALGEBRA + ALGEBRA:
            reports.append(check(family, n))
    varpi_max = max_n if varpi_max is None else varpi_max
    for total in range(max_n + 1):
        for n in range(total + 1):
            m = total - n
            reports.append(check_B1(family, n, m, require_unique=require_unique_g))
            g = g_for(family, n, m)
            if g is None:
                reports.append(AxiomReport("B2", (n, m)).fail(reason="no compatibility bijection found"))
                continue
            reports.append(check_B2(family, n, m, g))
            if total <= varpi_max:
                reports.append(check_varpi_bijection(family, n, m, g))
    return reports
