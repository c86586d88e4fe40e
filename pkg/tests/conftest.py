import os
import random
from pathlib import Path

import pytest
from hypothesis import settings

from colorlie.liealg import CATALOG, builtin_algebra

ROOT = Path(__file__).resolve().parents[1]
SEED = int(os.environ.get("COLORLIE_SEED", "0"))

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")

_ACCEPTANCE = []


def record_acceptance(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    _ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)


def catalog_algebras():
    out = []
    for name in CATALOG:
        if name == "abelian":
            out += [builtin_algebra(name, 2), builtin_algebra(name, 3)]
        elif name == "abelian_mixed":
            out += [builtin_algebra(name, 2), builtin_algebra(name, 3, odd=2)]
        elif name.startswith("abelian"):
            out += [builtin_algebra(name, 1), builtin_algebra(name, 2), builtin_algebra(name, 3)]
        else:
            out.append(builtin_algebra(name))
    return out


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture
def repo_root():
    return ROOT
