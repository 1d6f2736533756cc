import pytest
from click.testing import CliRunner

from jordanum import J2_MINUS_ONE, J2_PLUS_ONE, NumberSystem, jn_minus_one_system


@pytest.fixture(scope="function")
def j2p1() -> NumberSystem:
    return J2_PLUS_ONE


@pytest.fixture(scope="function")
def j2m1() -> NumberSystem:
    return J2_MINUS_ONE


@pytest.fixture(scope="function")
def j3m1() -> NumberSystem:
    return jn_minus_one_system(3)


@pytest.fixture(scope="function")
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(scope="function")
def swap_descent_rows() -> list[tuple[str, int, int]]:
    """p^4 m^2 walked down by pm -> mp swaps to the last row not covered with fewer m's."""
    return [
        ("ppppmm", 13, 2),
        ("pppmpm", 11, 2),
        ("pppmmp", 9, 2),
        ("ppmpmp", 7, 2),
        ("ppmmpp", 5, 2),
        ("pmpmpp", 3, 2),
        ("pmmppp", 1, 2),
    ]


@pytest.fixture(scope="function")
def nested_words() -> list[str]:
    """Digit strings using run-length counts and repeated groups."""
    return [
        "p*3 z*2 p",
        "(z p)*4 z",
        "(pz)*3 (p (zp)*2)*2 z",
        "p ((pz)*2 z)*3 (zp)*5",
    ]


def sample_targets(a_range: int, b_range: int) -> list[tuple[int, int]]:
    return [(a, b) for b in range(-b_range, b_range + 1) for a in range(-a_range, a_range + 1)]


@pytest.fixture(scope="function")
def small_box() -> list[tuple[int, int]]:
    return sample_targets(12, 4)

