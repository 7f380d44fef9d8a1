"""One test per acceptance criterion; the terminal summary lists PASS/FAIL for each."""

from __future__ import annotations

import os
import sys
import warnings

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from acceptance import CRITERIA  # noqa: E402


@pytest.mark.parametrize("n", list(CRITERIA), ids=[f"criterion_{n}" for n in CRITERIA])
def test_criterion(n):
    out = CRITERIA[n]()
    print(out.line(n))
    if out.flag:
        warnings.warn(f"criterion {n}: {out.flag}: {out.failures[:3]}")
    assert out.ok, out.line(n) + "\n" + "\n".join(map(repr, out.failures[:10]))
