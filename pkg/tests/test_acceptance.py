"""Acceptance gate: one pass/fail line per criterion (run with ``pytest -s`` to see them)."""
import os
import subprocess
import sys

import pytest

from singlink import _kernels
from singlink.acceptance import CRITERIA, format_line, run_criterion


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"{c.number:02d}-{c.name}")
def test_criterion(criterion):
    ok, detail, elapsed = run_criterion(criterion)
    print(f"\n[{_kernels.BACKEND}] " + format_line(criterion, ok, detail, elapsed))
    assert ok, detail


@pytest.mark.parametrize("pure", [False, True], ids=["default-backend", "pure-python"])
def test_selftest_exit_code(pure):
    env = dict(os.environ)
    if pure:
        env["SINGLINK_PURE_PYTHON"] = "1"
    proc = subprocess.run([sys.executable, "-m", "singlink", "selftest"], capture_output=True, text=True, env=env)
    print("\n" + proc.stdout)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert proc.stdout.count("PASS\t") == len(CRITERIA)
