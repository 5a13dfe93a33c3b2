"""Exit criteria: every theorem suite at zero tolerance (exact arithmetic).

Each criterion prints one PASS/FAIL line; the lines are repeated in the
pytest terminal summary.
"""

import pytest

from poisekit import suites

SEED = 0
ACCEPTANCE_LINES = []


@pytest.mark.parametrize("number", sorted(suites.CRITERIA))
def test_criterion(number):
    result = suites.CRITERIA[number](seed=SEED)
    line = result.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert result.passed, "\n".join(result.failures[:20])


def test_criterion_case_counts():
    # the stated sample sizes, so a silently shrunken suite cannot pass
    assert suites.criterion_1.__defaults__ == (0, 200)
    assert suites.criterion_3.__defaults__ == (0, 200)
    assert suites.criterion_5.__defaults__ == (0, 100)
    for m, n in suites.SCALE_PAIRS:
        assert len(suites.scale_instances(m, n, 100, SEED)) >= 100
        assert all(len(i.points) <= m * n - 1 for i in suites.scale_instances(m, n, 100, SEED))
