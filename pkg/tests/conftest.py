import random
from pathlib import Path

import pytest
from hypothesis import settings

from zonoharm.formats import parse_arrangement, parse_graph

settings.register_profile("zonoharm", deadline=None)
settings.load_profile("zonoharm")

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def house_graph():
    return parse_graph((DATA / "house.graph").read_text())


@pytest.fixture(scope="session")
def house_arrangement():
    return parse_arrangement((DATA / "house.arr").read_text())


@pytest.fixture()
def rng():
    return random.Random(20240817)


def data_path(name: str) -> Path:
    return DATA / name
