import random

import pytest

from sharpknot.diagram import BraidWord


def random_braid(rng: random.Random, max_letters: int, max_strands: int, min_strands: int = 2,
                 positive: bool = False) -> BraidWord:
    k = rng.randint(min_strands, max_strands)
    n = rng.randint(0, max_letters)
    letters = []
    for _ in range(n):
        g = rng.randint(1, k - 1)
        letters.append(g if positive or rng.random() < 0.5 else -g)
    return BraidWord(tuple(letters), k)


def random_knot_braid(rng: random.Random, max_letters: int, max_strands: int, **kw) -> BraidWord:
    while True:
        b = random_braid(rng, max_letters, max_strands, **kw)
        if b.is_knot():
            return b


@pytest.fixture
def rng():
    return random.Random(20261018)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
