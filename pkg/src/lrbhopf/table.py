"""Families loaded from (and exported to) JSON descriptor files.

Descriptor layout (all cross references are 0-based face indices)::

    {
      "format": "lrbhopf-family/1",
      "max_n": 3,
      "grades":  [{"faces": [label, ...], "product": [[...], ...], "rank": [...]}, ...],
      "b_iso":   [{face_label: {"composition": [f1, ...], "map": [[H, [h1, ...]], ...]}}, ...],
      "j_iso":   [{"f1+f2+...": {"face": F, "map": [[[x1, ...], H], ...]}}, ...]
    }

``grades[n]``, ``b_iso[n]`` and ``j_iso[n]`` describe grade ``n``. The empty
composition of 0 is keyed ``""``. ``b_iso`` maps every face ``H >= F`` to its
image tuple; ``j_iso`` maps every factor tuple to its image face.
"""
from __future__ import annotations

import itertools
import json
import re
from pathlib import Path

import numpy as np

from .lrb import (
    BIso,
    Family,
    FamilyDataError,
    FamilyError,
    JIso,
    composition_key,
    int_compositions,
)

FORMAT = "lrbhopf-family/1"


class DescriptorError(FamilyError):
    """A descriptor failed to parse or violates an invariant."""

    def __init__(self, message: str, *, grade: int | None = None, face: str | None = None):
        where = []
        if grade is not None:
            where.append(f"grade {grade}")
        if face is not None:
            where.append(f"face {face!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.grade = grade
        self.face = face


class TableFamily(Family):
    """A family given entirely by explicit tables."""

    def __init__(self, descriptor: dict, *, name: str = "table"):
        self.descriptor = descriptor
        self.name = name
        grades = descriptor["grades"]
        super().__init__(int(descriptor["max_n"]))
        self._labels = [list(g["faces"]) for g in grades]
        self._rank_arrays = [np.asarray(g["rank"], dtype=np.int64) for g in grades]
        self._raw_tables = [np.asarray(g["product"], dtype=np.int32) for g in grades]

    def face_labels(self, n: int) -> list[str]:
        self.check_grade(n)
        return self._labels[n]

    def ranks(self, n: int) -> np.ndarray:
        self.check_grade(n)
        return self._rank_arrays[n]

    def _build_table(self, n: int) -> np.ndarray:
        return self._raw_tables[n]

    def _compute_b_iso(self, n: int, face: int) -> BIso:
        entry = self.descriptor["b_iso"][n][self.label(n, face)]
        forward = {int(h): tuple(int(v) for v in img) for h, img in entry["map"]}
        backward = {v: k for k, v in forward.items()}
        return BIso(n, face, tuple(int(p) for p in entry["composition"]), forward, backward)

    def _compute_j_iso(self, n: int, parts: tuple[int, ...]) -> JIso:
        key = composition_key(parts)
        try:
            entry = self.descriptor["j_iso"][n][key]
        except KeyError:
            raise FamilyDataError(f"no j data for composition {key!r}", grade=n) from None
        forward = {tuple(int(v) for v in src): int(h) for src, h in entry["map"]}
        backward = {v: k for k, v in forward.items()}
        return JIso(n, parts, int(entry["face"]), forward, backward)


def family_to_descriptor(family: Family, max_n: int) -> dict:
    grades, b_iso, j_iso = [], [], []
    for n in range(max_n + 1):
        labels = list(family.face_labels(n))
        grades.append(
            {
                "faces": labels,
                "product": family.table(n).tolist(),
                "rank": [int(r) for r in family.ranks(n)],
            }
        )
        b_grade = {}
        for F in family.faces(n):
            iso = family.b_iso(n, F)
            b_grade[labels[F]] = {
                "composition": list(iso.composition),
                "map": [[H, list(iso.forward[H])] for H in sorted(iso.forward)],
            }
        b_iso.append(b_grade)
        j_grade = {}
        for parts in int_compositions(n):
            iso = family.j_iso(parts)
            j_grade[composition_key(parts)] = {
                "face": iso.face,
                "map": [[list(src), iso.forward[src]] for src in sorted(iso.forward)],
            }
        j_iso.append(j_grade)
    return {"format": FORMAT, "max_n": max_n, "grades": grades, "b_iso": b_iso, "j_iso": j_iso}


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]")


def dumps_descriptor(doc: dict) -> str:
    text = json.dumps(doc, indent=1, ensure_ascii=False)

    # innermost integer lists go on one line
    def collapse(match: re.Match) -> str:
        items = [s.strip() for s in (match.group(1) or "").split(",") if s.strip()]
        return "[" + ", ".join(items) + "]"

    return _INT_LIST.sub(collapse, text) + "\n"


def export_family(family: Family, max_n: int, path: str | Path) -> None:
    """Write a descriptor for grades ``0..max_n`` that :func:`load_descriptor` round-trips."""
    Path(path).write_text(dumps_descriptor(family_to_descriptor(family, max_n)), encoding="utf-8")


def load_descriptor(path: str | Path) -> TableFamily:
    """Load and eagerly validate a descriptor file."""
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        raise DescriptorError(f"{path}: empty descriptor")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"{path}: parse error: {exc}") from None
    validate_descriptor(doc)
    return TableFamily(doc, name=str(path))


def validate_descriptor(doc: dict) -> None:
    if not isinstance(doc, dict):
        raise DescriptorError("descriptor must be a JSON object")
    for key in ("max_n", "grades", "b_iso", "j_iso"):
        if key not in doc:
            raise DescriptorError(f"missing top-level key {key!r}")
    max_n = doc["max_n"]
    if not isinstance(max_n, int) or max_n < 0:
        raise DescriptorError("max_n must be a non-negative integer")
    for key in ("grades", "b_iso", "j_iso"):
        if len(doc[key]) != max_n + 1:
            raise DescriptorError(f"{key} must list grades 0..{max_n}")

    sizes = []
    leqs = []
    for n, grade in enumerate(doc["grades"]):
        faces = grade.get("faces")
        if not isinstance(faces, list) or not faces or len(set(faces)) != len(faces):
            raise DescriptorError("face labels must be a non-empty list of distinct strings", grade=n)
        size = len(faces)
        if n <= 1 and size != 1:
            raise DescriptorError(f"grade {n} must have exactly one face", grade=n)
        try:
            table = np.asarray(grade["product"], dtype=np.int64)
            rank = np.asarray(grade["rank"], dtype=np.int64)
        except (KeyError, ValueError, TypeError):
            raise DescriptorError("product/rank tables malformed", grade=n) from None
        if table.shape != (size, size):
            raise DescriptorError(f"product table must be {size}x{size}", grade=n)
        if table.min() < 0 or table.max() >= size:
            raise DescriptorError("product table is not closed", grade=n)
        if rank.shape != (size,) or rank.min() < 0:
            raise DescriptorError("rank vector malformed", grade=n)
        _validate_graded_poset(n, faces, table, rank)
        sizes.append(size)
        leqs.append(table == np.arange(size)[None, :])

    labels = [g["faces"] for g in doc["grades"]]
    for n in range(max_n + 1):
        entries = doc["b_iso"][n]
        for F, label in enumerate(labels[n]):
            if label not in entries:
                raise DescriptorError("missing b_iso entry", grade=n, face=label)
            entry = entries[label]
            comp = [int(p) for p in entry.get("composition", [])]
            if not comp or sum(comp) != n or any(p > max_n for p in comp):
                raise DescriptorError("b_iso composition invalid", grade=n, face=label)
            domain = set(int(h) for h in np.nonzero(leqs[n][F])[0])
            _check_bijection(
                [(int(h), tuple(img)) for h, img in entry.get("map", [])],
                domain,
                set(itertools.product(*(range(sizes[p]) for p in comp))),
                n,
                label,
                "b_iso",
            )
        for parts in int_compositions(n):
            key = composition_key(parts)
            entry = doc["j_iso"][n].get(key)
            if entry is None:
                raise DescriptorError(f"missing j_iso entry {key!r}", grade=n)
            F = entry.get("face")
            if not isinstance(F, int) or not 0 <= F < sizes[n]:
                raise DescriptorError(f"j_iso {key!r} face out of range", grade=n)
            domain = set(itertools.product(*(range(sizes[p]) for p in parts)))
            codomain = set(int(h) for h in np.nonzero(leqs[n][F])[0])
            _check_bijection(
                [(tuple(src), int(h)) for src, h in entry.get("map", [])],
                domain,
                codomain,
                n,
                labels[n][F],
                f"j_iso {key!r}",
            )


def _validate_graded_poset(n, faces, table, rank) -> None:
    size = len(faces)
    leq = table == np.arange(size)[None, :]
    minima = [x for x in range(size) if leq[x].all()]
    if len(minima) != 1 or rank[minima[0]] != 0 or int((rank == 0).sum()) != 1:
        raise DescriptorError("grade needs a unique minimum of rank 0", grade=n)
    if not leq.diagonal().all():
        raise DescriptorError("order is not reflexive", grade=n)
    if np.any(leq & leq.T & ~np.eye(size, dtype=bool)):
        raise DescriptorError("order is not antisymmetric", grade=n)
    ll = leq.astype(np.int64)
    if np.any(((ll @ ll) > 0) & ~leq):
        raise DescriptorError("order is not transitive", grade=n)
    strict = leq & ~np.eye(size, dtype=bool)
    covers = strict & ~(((strict.astype(np.int64) @ strict.astype(np.int64)) > 0))
    xs, ys = np.nonzero(covers)
    bad = np.nonzero(rank[ys] != rank[xs] + 1)[0]
    if bad.size:
        raise DescriptorError("rank not consistent with covers", grade=n, face=faces[ys[bad[0]]])
    maximal = [x for x in range(size) if not strict[x].any()]
    if any(rank[x] != max(n - 1, 0) for x in maximal):
        raise DescriptorError(f"maximal faces must have rank {max(n - 1, 0)}", grade=n)


def _check_bijection(pairs, domain, codomain, n, label, what) -> None:
    sources = [s for s, _ in pairs]
    targets = [t for _, t in pairs]
    if set(sources) != domain or len(sources) != len(domain):
        raise DescriptorError(f"{what} domain is wrong", grade=n, face=label)
    if len(set(targets)) != len(targets):
        raise DescriptorError(f"{what} is not injective", grade=n, face=label)
    if set(targets) != codomain:
        raise DescriptorError(f"{what} is not onto its codomain", grade=n, face=label)
