import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT / "app"))

from pneufab.design import parse_design, to_typed  # noqa: E402
from pneufab.materials import builtin_table  # noqa: E402
from pneufab.patterns import generate  # noqa: E402
from pneufab.toolpath import MachineProfile  # noqa: E402

DESIGNS = ROOT / "designs"
MACHINES = ROOT / "machines"
GOLDEN = ROOT / "tests" / "golden"

CORPUS = (
    "kirigami_100",
    "kirigami_125",
    "kirigami_150",
    "rect_pouch",
    "linear",
    "conductive_linear",
    "bending",
    "antagonistic",
    "twisting_30",
    "twisting_60",
)


def pytest_addoption(parser):
    parser.addoption(
        "--update-golden",
        action="store_true",
        default=False,
        help="rewrite tests/golden/ from the current output instead of comparing",
    )


@pytest.fixture
def materials():
    return builtin_table()


@pytest.fixture
def machine():
    return MachineProfile()


@pytest.fixture
def load_design(materials):
    def load(name):
        return to_typed(parse_design((DESIGNS / f"{name}.pf").read_text(encoding="utf-8")), materials)
    return load


@pytest.fixture
def load_sheet(load_design, materials):
    def load(name):
        return generate(load_design(name), materials=materials)
    return load


def design_text(family, params, layers=("tpu_nylon_medium", "tpu_nylon_medium"), name="t", extra=""):
    """Small design document for tests."""
    keys = ("bottom", "top") if len(layers) == 2 else ("bottom", "middle", "top")
    lines = ["[design]", f"name = {name}", f"type = {family}", "[layers]"]
    lines += [f"{k} = {v}" for k, v in zip(keys, layers)]
    lines += [extra] if extra else []
    lines += ["[params]"] + [f"{k} = {v}" for k, v in params.items()]
    return "\n".join(lines) + "\n"
