"""One test per acceptance criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible even under
pytest's output capture).  Run this file directly for the same lines
without pytest.
"""

import time

import pytest

from ternary_orbits import acceptance


@pytest.mark.parametrize("cid,title,fn", acceptance.CRITERIA, ids=[f"criterion_{c[0]}" for c in acceptance.CRITERIA])
def test_criterion(cid, title, fn, capsys):
    t = time.perf_counter()
    ok, detail = fn()
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {cid}: {title} ({time.perf_counter() - t:.1f}s) :: {detail}"
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import sys

    sys.exit(0 if all(acceptance.run().values()) else 1)
