"""Exact rational linear algebra for graded bialgebras.

Basis elements are keyed ``(grade, index)`` inside one algebra; the algebra
supplies text labels. ``LinComb`` is an immutable sparse map from keys (or
pairs of keys, for the tensor square) to :class:`fractions.Fraction`.
"""
from __future__ import annotations

import random
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .lrb import FamilyError

Key = tuple[int, int]
UNIT_KEY: Key = (0, 0)
DEFAULT_SEED = 20240607


class AlgebraError(ValueError):
    """Tag/arity mismatch or other misuse of linear combinations."""


class ExprError(ValueError):
    """Element expression failed to parse; ``position`` is a 0-based offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def _clean(terms: Mapping) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v != 0}


@dataclass(frozen=True, eq=False)
class LinComb:
    tag: str
    terms: Mapping = field(default_factory=dict)
    arity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))

    @classmethod
    def zero(cls, tag: str, arity: int = 1) -> LinComb:
        return cls(tag, {}, arity)

    @classmethod
    def basis(cls, tag: str, key, coefficient=1) -> LinComb:
        arity = 2 if isinstance(key[0], tuple) else 1
        return cls(tag, {key: coefficient}, arity)

    def _compatible(self, other: LinComb) -> None:
        if not isinstance(other, LinComb):
            raise AlgebraError(f"cannot combine LinComb with {type(other).__name__}")
        if other.tag != self.tag or other.arity != self.arity:
            raise AlgebraError(f"mismatch: {self.tag}^{self.arity} vs {other.tag}^{other.arity}")

    def __add__(self, other: LinComb) -> LinComb:
        self._compatible(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LinComb(self.tag, out, self.arity)

    def __sub__(self, other: LinComb) -> LinComb:
        return self + other.scale(-1)

    def __neg__(self) -> LinComb:
        return self.scale(-1)

    def scale(self, c) -> LinComb:
        c = Fraction(c)
        return LinComb(self.tag, {k: c * v for k, v in self.terms.items()}, self.arity)

    def __rmul__(self, c) -> LinComb:
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return (self.tag, self.arity, self.terms) == (other.tag, other.arity, other.terms)

    def __hash__(self) -> int:
        return hash((self.tag, self.arity, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator:
        return iter(sorted(self.terms.items()))

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def grades(self) -> set:
        if self.arity == 1:
            return {k[0] for k in self.terms}
        return {(a[0], b[0]) for a, b in self.terms}

    def __repr__(self) -> str:
        return f"LinComb({self.tag!r}, {dict(sorted(self.terms.items()))!r}, arity={self.arity})"


def add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def scale(c, a: LinComb) -> LinComb:
    return a.scale(c)


def tensor(a: LinComb, b: LinComb) -> LinComb:
    if a.arity != 1 or b.arity != 1 or a.tag != b.tag:
        raise AlgebraError("tensor needs two single-tensor elements of one algebra")
    return LinComb(a.tag, {(x, y): c * d for x, c in a.terms.items() for y, d in b.terms.items()}, 2)


class GradedBialgebra(ABC):
    """A connected graded bialgebra given on a finite-per-grade basis.

    Subclasses implement the basis and the structure maps on basis elements of
    positive degree; the unit, counit and caching live here.
    """

    tag: str
    letter: str

    def __init__(self):
        self._prod: dict[tuple[Key, Key], dict] = {}
        self._coprod: dict[Key, dict] = {}
        self._takeuchi: dict[tuple[int, Key], LinComb] = {}
        self._antipode: dict[Key, LinComb] = {}

    # -- basis ---------------------------------------------------------------

    @abstractmethod
    def dim(self, n: int) -> int: ...

    @abstractmethod
    def basis_label(self, key: Key) -> str:
        """Label text of a positive-degree basis element (inside ``letter[...]``)."""

    @abstractmethod
    def parse_label(self, text: str) -> Key: ...

    @abstractmethod
    def _product(self, a: Key, b: Key) -> dict: ...

    @abstractmethod
    def _coproduct(self, a: Key) -> dict: ...

    def basis(self, n: int) -> list[Key]:
        return [(n, i) for i in range(self.dim(n))]

    def element(self, key: Key, coefficient=1) -> LinComb:
        self._check_key(key)
        return LinComb(self.tag, {key: coefficient})

    def unit(self) -> LinComb:
        return LinComb(self.tag, {UNIT_KEY: 1})

    def zero(self, arity: int = 1) -> LinComb:
        return LinComb.zero(self.tag, arity)

    def _check_key(self, key: Key) -> None:
        n, i = key
        if not 0 <= i < self.dim(n):
            raise AlgebraError(f"{self.tag} has no basis element {i} in degree {n}")

    def _own(self, x: LinComb, arity: int = 1) -> None:
        if x.tag != self.tag or x.arity != arity:
            raise AlgebraError(f"expected a {self.tag} element of arity {arity}, got {x.tag}^{x.arity}")

    # -- structure on basis elements ---------------------------------------------

    def product_basis(self, a: Key, b: Key) -> dict:
        if a[0] == 0:
            return {b: Fraction(1)}
        if b[0] == 0:
            return {a: Fraction(1)}
        key = (a, b)
        if key not in self._prod:
            self._prod[key] = _clean(self._product(a, b))
        return self._prod[key]

    def coproduct_basis(self, a: Key) -> dict:
        if a[0] == 0:
            return {(UNIT_KEY, UNIT_KEY): Fraction(1)}
        if a not in self._coprod:
            self._coprod[a] = _clean(self._coproduct(a))
        return self._coprod[a]

    # -- structure on elements ---------------------------------------------------

    def multiply(self, x: LinComb, y: LinComb) -> LinComb:
        self._own(x)
        self._own(y)
        out: dict = {}
        for a, c in x.terms.items():
            for b, d in y.terms.items():
                for k, v in self.product_basis(a, b).items():
                    out[k] = out.get(k, 0) + c * d * v
        return LinComb(self.tag, out)

    def multiply_tensor(self, x: LinComb, y: LinComb) -> LinComb:
        """Componentwise product on the tensor square."""
        self._own(x, 2)
        self._own(y, 2)
        out: dict = {}
        for (a1, a2), c in x.terms.items():
            for (b1, b2), d in y.terms.items():
                for k1, v1 in self.product_basis(a1, b1).items():
                    for k2, v2 in self.product_basis(a2, b2).items():
                        out[(k1, k2)] = out.get((k1, k2), 0) + c * d * v1 * v2
        return LinComb(self.tag, out, 2)

    def coproduct(self, x: LinComb) -> LinComb:
        self._own(x)
        out: dict = {}
        for a, c in x.terms.items():
            for k, v in self.coproduct_basis(a).items():
                out[k] = out.get(k, 0) + c * v
        return LinComb(self.tag, out, 2)

    def counit(self, x: LinComb) -> Fraction:
        self._own(x)
        return x.coefficient(UNIT_KEY)

    def mu(self, t: LinComb) -> LinComb:
        """Multiplication map on a two-tensor."""
        self._own(t, 2)
        out: dict = {}
        for (a, b), c in t.terms.items():
            for k, v in self.product_basis(a, b).items():
                out[k] = out.get(k, 0) + c * v
        return LinComb(self.tag, out)

    def apply_left(self, fn, t: LinComb) -> LinComb:
        """``(fn ⊗ id)`` on a two-tensor, ``fn`` acting on basis keys."""
        out: dict = {}
        for (a, b), c in t.terms.items():
            for k, v in fn(a).terms.items():
                out[(k, b)] = out.get((k, b), 0) + c * v
        return LinComb(self.tag, out, 2)

    def apply_right(self, fn, t: LinComb) -> LinComb:
        out: dict = {}
        for (a, b), c in t.terms.items():
            for k, v in fn(b).terms.items():
                out[(a, k)] = out.get((a, k), 0) + c * v
        return LinComb(self.tag, out, 2)

    # -- antipode ------------------------------------------------------------------

    def _takeuchi_term(self, k: int, a: Key) -> LinComb:
        """``m^{(k-1)} ∘ π^{⊗k} ∘ Δ^{(k-1)}`` on a basis element, right-nested."""
        memo = (k, a)
        if memo in self._takeuchi:
            return self._takeuchi[memo]
        if a[0] == 0 or k > a[0]:
            out = self.zero()
        elif k == 1:
            out = self.element(a)
        else:
            out = self.zero()
            for (left, right), c in self.coproduct_basis(a).items():
                if left[0] == 0 or right[0] == 0:
                    continue
                rest = self._takeuchi_term(k - 1, right)
                if rest:
                    out = out + self.multiply(self.element(left, c), rest)
        self._takeuchi[memo] = out
        return out

    def antipode_basis(self, a: Key) -> LinComb:
        if a not in self._antipode:
            if a[0] == 0:
                out = self.unit()
            else:
                out = self.zero()
                for k in range(1, a[0] + 1):
                    out = out + self._takeuchi_term(k, a).scale((-1) ** k)
            self._antipode[a] = out
        return self._antipode[a]

    def antipode(self, x: LinComb) -> LinComb:
        self._own(x)
        out = self.zero()
        for a, c in x.terms.items():
            out = out + self.antipode_basis(a).scale(c)
        return out

    # -- text ----------------------------------------------------------------------

    def key_text(self, key: Key) -> str:
        if key[0] == 0:
            return "1"
        return f"{self.letter}[{self.basis_label(key)}]"

    def render(self, x: LinComb) -> str:
        if not x.terms:
            return "0"
        parts = []
        for key, c in sorted(x.terms.items()):
            text = self.key_text(key) if x.arity == 1 else f"{self.key_text(key[0])} ⊗ {self.key_text(key[1])}"
            mag = abs(c)
            body = text if mag == 1 else f"{mag}*{text}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def parse(self, text: str) -> LinComb:
        return parse_element(self, text)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.tag}>"


_NUMBER = re.compile(r"\d+(?:/\d+)?")


def parse_element(algebra: GradedBialgebra, text: str) -> LinComb:
    """Parse ``c*L[label] ± ...``; ``1`` is the unit and a bare rational is a unit multiple."""
    pos = 0
    out = algebra.zero()
    size = len(text)

    def skip() -> None:
        nonlocal pos
        while pos < size and text[pos].isspace():
            pos += 1

    skip()
    if pos == size:
        raise ExprError("empty expression", text, 0)
    first = True
    while True:
        skip()
        sign = 1
        if pos < size and text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
            skip()
        elif not first:
            raise ExprError("expected '+' or '-'", text, pos)
        first = False
        coef = Fraction(1)
        key: Key | None = None
        m = _NUMBER.match(text, pos)
        if m:
            coef = Fraction(m.group())
            pos = m.end()
            skip()
            if pos < size and text[pos] == "*":
                pos += 1
                skip()
            else:
                key = UNIT_KEY
        if key is None:
            if text.startswith(algebra.letter + "[", pos):
                start = pos + len(algebra.letter) + 1
                end = text.find("]", start)
                if end < 0:
                    raise ExprError("unterminated '['", text, pos)
                label = text[start:end]
                try:
                    key = algebra.parse_label(label)
                except (FamilyError, ValueError, LookupError) as exc:
                    raise ExprError(f"bad {algebra.tag} label {label!r} ({exc})", text, start) from None
                pos = end + 1
            elif text.startswith("1", pos):
                key = UNIT_KEY
                pos += 1
            else:
                raise ExprError(f"expected a number, '1' or '{algebra.letter}[...]'", text, pos)
        out = out + algebra.element(key, sign * coef)
        skip()
        if pos == size:
            return out


# -- law checkers ---------------------------------------------------------------------


@dataclass
class LawReport:
    subject: str
    max_degree: int
    passed: bool = True
    checks: dict[str, int] = field(default_factory=dict)
    failure: dict | None = None

    def count(self, law: str, k: int = 1) -> None:
        self.checks[law] = self.checks.get(law, 0) + k

    def fail(self, law: str, **witness) -> LawReport:
        self.passed = False
        self.failure = {"law": law, **witness}
        return self

    def to_dict(self) -> dict:
        return {"subject": self.subject, "max_degree": self.max_degree, "passed": self.passed,
                "checks": dict(sorted(self.checks.items())), "failure": self.failure}

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        counts = ", ".join(f"{k}={v}" for k, v in sorted(self.checks.items()))
        line = f"{status}  {self.subject} (degree <= {self.max_degree}): {counts}"
        if self.failure:
            line += "\n      failure: " + "; ".join(f"{k}={v}" for k, v in self.failure.items())
        return line


def _basis_upto(alg: GradedBialgebra, d: int) -> list[Key]:
    return [k for n in range(d + 1) for k in alg.basis(n)]


def _pairs_of_degree(alg: GradedBialgebra, total: int) -> list[tuple[Key, Key]]:
    return [(a, b) for n in range(total + 1) for a in alg.basis(n) for b in alg.basis(total - n)]


def check_compatibility(alg: GradedBialgebra, a: Key, b: Key) -> tuple[LinComb, LinComb]:
    """Both sides of ``Δ(a*b) = Δ(a)*Δ(b)``."""
    lhs = alg.coproduct(alg.multiply(alg.element(a), alg.element(b)))
    rhs = alg.multiply_tensor(alg.coproduct(alg.element(a)), alg.coproduct(alg.element(b)))
    return lhs, rhs


def check_bialgebra_laws(alg: GradedBialgebra, max_degree: int, *, sample_degree: int | None = None,
                         samples: int = 1000, seed: int = DEFAULT_SEED,
                         antipode_degree: int | None = None) -> LawReport:
    """Exhaustive bialgebra and Hopf laws up to ``max_degree``; optional seeded sampling above."""
    rep = LawReport(alg.tag, max_degree)
    one = alg.unit()
    basis = _basis_upto(alg, max_degree)
    if alg.dim(0) != 1:
        return rep.fail("connected", dim0=alg.dim(0))
    if alg.coproduct(one) != tensor(one, one):
        return rep.fail("coproduct of unit")
    for a in basis:
        x = alg.element(a)
        rep.count("unit")
        if alg.multiply(one, x) != x or alg.multiply(x, one) != x:
            return rep.fail("unit", a=alg.key_text(a))
        delta = alg.coproduct(x)
        rep.count("graded coproduct")
        if any(p + q != a[0] for p, q in delta.grades()):
            return rep.fail("graded coproduct", a=alg.key_text(a))
        rep.count("counit")
        left = LinComb(alg.tag, {k2: c * (1 if k1 == UNIT_KEY else 0) for (k1, k2), c in delta.terms.items()})
        right = LinComb(alg.tag, {k1: c * (1 if k2 == UNIT_KEY else 0) for (k1, k2), c in delta.terms.items()})
        if left != x or right != x:
            return rep.fail("counit", a=alg.key_text(a))
        rep.count("coassociativity")
        lhs = _coassoc(alg, delta, left_side=True)
        rhs = _coassoc(alg, delta, left_side=False)
        if lhs != rhs:
            return rep.fail("coassociativity", a=alg.key_text(a))
    for total in range(max_degree + 1):
        for a, b in _pairs_of_degree(alg, total):
            prod = alg.multiply(alg.element(a), alg.element(b))
            rep.count("graded product")
            if prod.grades() - {total}:
                return rep.fail("graded product", a=alg.key_text(a), b=alg.key_text(b))
            rep.count("counit multiplicative")
            if alg.counit(prod) != alg.counit(alg.element(a)) * alg.counit(alg.element(b)):
                return rep.fail("counit multiplicative", a=alg.key_text(a), b=alg.key_text(b))
            rep.count("compatibility")
            lhs, rhs = check_compatibility(alg, a, b)
            if lhs != rhs:
                return rep.fail("compatibility", a=alg.key_text(a), b=alg.key_text(b),
                                lhs=alg.render(lhs), rhs=alg.render(rhs))
    for total in range(max_degree + 1):
        for n in range(total + 1):
            for m in range(total - n + 1):
                for a in alg.basis(n):
                    for b in alg.basis(m):
                        ab = alg.multiply(alg.element(a), alg.element(b))
                        for c in alg.basis(total - n - m):
                            rep.count("associativity")
                            z = alg.element(c)
                            if alg.multiply(ab, z) != alg.multiply(alg.element(a), alg.multiply(alg.element(b), z)):
                                return rep.fail("associativity", a=alg.key_text(a), b=alg.key_text(b),
                                                c=alg.key_text(c))
    failure = check_antipode_laws(alg, max_degree if antipode_degree is None else antipode_degree, rep)
    if failure:
        return failure
    if sample_degree is not None:
        rng = random.Random(seed)
        pairs = [(n, sample_degree - n) for n in range(sample_degree + 1)]
        for _ in range(samples):
            n, m = rng.choice(pairs)
            a = (n, rng.randrange(alg.dim(n)))
            b = (m, rng.randrange(alg.dim(m)))
            rep.count("compatibility (sampled)")
            lhs, rhs = check_compatibility(alg, a, b)
            if lhs != rhs:
                return rep.fail("compatibility (sampled)", a=alg.key_text(a), b=alg.key_text(b), seed=seed)
    return rep


def _coassoc(alg: GradedBialgebra, delta: LinComb, *, left_side: bool) -> dict:
    out: dict = {}
    for (a, b), c in delta.terms.items():
        if left_side:
            for (a1, a2), d in alg.coproduct_basis(a).items():
                out[(a1, a2, b)] = out.get((a1, a2, b), 0) + c * d
        else:
            for (b1, b2), d in alg.coproduct_basis(b).items():
                out[(a, b1, b2)] = out.get((a, b1, b2), 0) + c * d
    return _clean(out)


def check_antipode_laws(alg: GradedBialgebra, max_degree: int, rep: LawReport | None = None) -> LawReport | None:
    """``m(S⊗id)Δ = uε = m(id⊗S)Δ`` and ``S(ab) = S(b)S(a)``; returns the failed report or None.

    With no ``rep`` given, a fresh report is created and always returned.
    """
    own = rep is None
    if own:
        rep = LawReport(alg.tag, max_degree)
    for a in _basis_upto(alg, max_degree):
        x = alg.element(a)
        delta = alg.coproduct(x)
        expect = alg.unit().scale(alg.counit(x))
        rep.count("antipode left")
        if alg.mu(alg.apply_left(alg.antipode_basis, delta)) != expect:
            return rep.fail("antipode left", a=alg.key_text(a))
        rep.count("antipode right")
        if alg.mu(alg.apply_right(alg.antipode_basis, delta)) != expect:
            return rep.fail("antipode right", a=alg.key_text(a))
    for total in range(max_degree + 1):
        for a, b in _pairs_of_degree(alg, total):
            rep.count("antipode anti-homomorphism")
            lhs = alg.antipode(alg.multiply(alg.element(a), alg.element(b)))
            rhs = alg.multiply(alg.antipode_basis(b), alg.antipode_basis(a))
            if lhs != rhs:
                return rep.fail("antipode anti-homomorphism", a=alg.key_text(a), b=alg.key_text(b))
    return rep if own else None


@dataclass
class BasisMap:
    """A linear map between two bialgebras, given on basis keys."""

    name: str
    source: GradedBialgebra
    target: GradedBialgebra
    on_basis: object  # Callable[[Key], LinComb]
    _cache: dict = field(default_factory=dict, repr=False)

    def basis_image(self, key: Key) -> LinComb:
        if key not in self._cache:
            self._cache[key] = self.on_basis(key)
        return self._cache[key]

    def __call__(self, x: LinComb) -> LinComb:
        self.source._own(x)
        out = self.target.zero()
        for a, c in x.terms.items():
            out = out + self.basis_image(a).scale(c)
        return out

    def tensor_apply(self, t: LinComb) -> LinComb:
        out: dict = {}
        for (a, b), c in t.terms.items():
            for k1, v1 in self.basis_image(a).terms.items():
                for k2, v2 in self.basis_image(b).terms.items():
                    out[(k1, k2)] = out.get((k1, k2), 0) + c * v1 * v2
        return LinComb(self.target.tag, out, 2)


def identity_map(alg: GradedBialgebra) -> BasisMap:
    return BasisMap("id", alg, alg, alg.element)


def check_morphism(f: BasisMap, max_degree: int) -> LawReport:
    """Algebra, coalgebra and antipode-intertwining properties of ``f`` up to ``max_degree``."""
    src, dst = f.source, f.target
    rep = LawReport(f.name, max_degree)
    if f(src.unit()) != dst.unit():
        return rep.fail("unit preserved")
    for a in _basis_upto(src, max_degree):
        x = src.element(a)
        fx = f(x)
        rep.count("graded")
        if fx.grades() - {a[0]}:
            return rep.fail("graded", a=src.key_text(a))
        rep.count("coalgebra morphism")
        if dst.coproduct(fx) != f.tensor_apply(src.coproduct(x)):
            return rep.fail("coalgebra morphism", a=src.key_text(a), image=dst.render(fx))
        rep.count("counit")
        if dst.counit(fx) != src.counit(x):
            return rep.fail("counit", a=src.key_text(a))
        rep.count("antipode intertwining")
        if f(src.antipode(x)) != dst.antipode(fx):
            return rep.fail("antipode intertwining", a=src.key_text(a))
    for total in range(max_degree + 1):
        for a, b in _pairs_of_degree(src, total):
            rep.count("algebra morphism")
            lhs = f(src.multiply(src.element(a), src.element(b)))
            rhs = dst.multiply(f.basis_image(a), f.basis_image(b))
            if lhs != rhs:
                return rep.fail("algebra morphism", a=src.key_text(a), b=src.key_text(b),
                                lhs=dst.render(lhs), rhs=dst.render(rhs))
    return rep


def rank(vectors: Iterable[Mapping]) -> int:
    """Exact rank of sparse rational vectors (Gaussian elimination)."""
    pivots: dict = {}
    r = 0
    for vec in vectors:
        v = _clean(vec)
        while v:
            lead = min(v)
            if lead not in pivots:
                c = v[lead]
                pivots[lead] = {k: x / c for k, x in v.items()}
                r += 1
                break
            row = pivots[lead]
            c = v[lead]
            for k, x in row.items():
                v[k] = v.get(k, 0) - c * x
            v = _clean(v)
    return r


def is_injective_on_basis(f: BasisMap, n: int) -> bool:
    images = [f.basis_image(k).terms for k in f.source.basis(n)]
    supports = [set(t) for t in images]
    if not supports:
        return True
    # disjoint nonempty supports are independent; otherwise eliminate
    if all(supports) and sum(map(len, supports)) == len(set().union(*supports)):
        return True
    return rank(images) == len(images)


def is_surjective_on_basis(f: BasisMap, n: int) -> bool:
    """Every target basis element of degree ``n`` is hit by the image of a basis element."""
    hit = set()
    for k in f.source.basis(n):
        img = f.basis_image(k).terms
        if len(img) == 1 and next(iter(img.values())) == 1:
            hit.update(img)
    return hit == set(f.target.basis(n))


def iter_pairs(alg: GradedBialgebra, max_degree: int) -> Iterator[tuple[Key, Key]]:
    for total in range(max_degree + 1):
        yield from _pairs_of_degree(alg, total)


__all__ = [
    "AlgebraError", "BasisMap", "DEFAULT_SEED", "ExprError", "GradedBialgebra", "Key", "LawReport",
    "LinComb", "UNIT_KEY", "add", "check_antipode_laws", "check_bialgebra_laws", "check_compatibility",
    "check_morphism", "identity_map", "is_injective_on_basis", "is_surjective_on_basis", "iter_pairs",
    "parse_element", "rank", "scale", "tensor",
]
