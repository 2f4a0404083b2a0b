from __future__ import annotations

import json
from pathlib import Path

import pytest

from lrbhopf.hopf import HopfDiagram
from lrbhopf.setcomp import SetCompFamily
from lrbhopf.table import TableFamily, family_to_descriptor

# lines collected by the acceptance tests, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fam() -> SetCompFamily:
    return SetCompFamily(6)


@pytest.fixture(scope="session")
def diagram(fam) -> HopfDiagram:
    return HopfDiagram(fam)


@pytest.fixture(scope="session")
def b3_doc(fam) -> dict:
    return family_to_descriptor(fam, 3)


@pytest.fixture
def b3_copy(b3_doc) -> dict:
    return json.loads(json.dumps(b3_doc))


def write_doc(path: Path, doc: dict) -> Path:
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


def unvalidated(doc: dict) -> TableFamily:
    """A table family built without eager validation (for axiom-failure fixtures)."""
    return TableFamily(doc, name="constructed")
