import pytest

from drazinlab import QQ, FieldTag, Matrix, check_conditions

GF2 = FieldTag.gf(2)
GF3 = FieldTag.gf(3)
GF5 = FieldTag.gf(5)


def M(rows, field=QQ):
    return Matrix(rows, field)


def I(n, field=QQ):
    return Matrix.identity(n, field)


def Z(n, field=QQ):
    return Matrix.zeros(n, n, field)


# noncommuting pair satisfying a^2 b = aba, b^2 a = bab
INTRO_A = ((1, 0), (0, 0))
INTRO_B = ((0, 0), (1, 0))
# pair for which a^D b^D != b^D a^D
REMARK_A = ((1, 0), (1, 0))
REMARK_B = ((1, 0), (0, 0))


@pytest.fixture
def intro_pair():
    return check_conditions(M(INTRO_A), M(INTRO_B))


@pytest.fixture
def remark_pair():
    return check_conditions(M(REMARK_A), M(REMARK_B))


_acceptance_lines = []


def record_criterion(line: str):
    _acceptance_lines.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
