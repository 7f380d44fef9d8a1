from __future__ import annotations

import sys

import pytest

from hpd.core import Hypergraph
from hpd.fixtures import fixtures


def hg(*faces, mu=None):
    return Hypergraph.from_faces([list(f) for f in faces], mu=mu)


@pytest.fixture(scope="session")
def fx():
    return fixtures()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("acceptance")
    if mod is None:
        return
    done = [(n, fn) for n, fn in mod.CRITERIA.items() if fn.cache_info().currsize]
    if not done:
        return
    terminalreporter.section("acceptance criteria")
    for n, fn in done:
        terminalreporter.write_line(fn().line(n))
