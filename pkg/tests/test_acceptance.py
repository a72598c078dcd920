"""Acceptance criteria, one test each, at their stated (exact) tolerances.

Each test prints one ``PASS``/``FAIL`` line; the lines are repeated in the
terminal summary under "acceptance criteria".
"""

import pytest

from bigpd.report import FAIL
from bigpd.suite import CRITERIA, _Cache


@pytest.fixture(scope="module")
def cache():
    return _Cache("gf32003", "grevlex")


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1), ids=lambda k: f"criterion{k:02d}")
def test_criterion(k, cache, acceptance_log):
    rep = CRITERIA[k - 1](cache)
    line = f"{'PASS' if rep.ok else 'FAIL'} criterion {k}: {rep.title.split(' ', 1)[1]}"
    print(line)
    acceptance_log.append(line)
    failed = [c.check for c in rep.checks if c.status == FAIL]
    assert rep.ok, f"failed checks: {failed}"
