import pathlib

import pytest

from hopfinv import parse_instance

FIXTURE_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "hopfinv" / "fixtures"

POSITIVE_NAMES = (
    "fix_trivial",
    "fix_trivial_nilp",
    "fix_g2",
    "fix_g2f2",
    "fix_sw",
    "fix_ga",
    "fix_der",
    "fix_z3",
    "fix_gauss",
)

NEGATIVE_NAMES = ("bad_coaction", "bad_counit", "bad_field", "bad_scalar")


def fixture_path(name):
    return FIXTURE_DIR / f"{name}.json"


@pytest.fixture(scope="session")
def corpus():
    """All positive fixtures, parsed once."""
    return {name: parse_instance(fixture_path(name)) for name in POSITIVE_NAMES}
