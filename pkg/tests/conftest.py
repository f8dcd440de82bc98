from pathlib import Path

import pytest

from crnkit import parse_file

NETWORKS_DIR = Path(__file__).resolve().parent.parent / "networks"

ALL_NETWORK_FILES = sorted(NETWORKS_DIR.glob("*.crn"))


@pytest.fixture(scope="session")
def networks_dir() -> Path:
    return NETWORKS_DIR


def load(name: str):
    return parse_file(NETWORKS_DIR / name)


@pytest.fixture(scope="session")
def yeast():
    return load("yeast.crn")


@pytest.fixture(scope="session")
def sorribas():
    return load("sorribas.crn")


@pytest.fixture(scope="session")
def baccam():
    return load("baccam.crn")


@pytest.fixture(scope="session")
def baccam_delayed():
    return load("baccam_delayed.crn")


@pytest.fixture(scope="session")
def handel():
    return load("handel.crn")


@pytest.fixture(scope="session")
def two_chains():
    return load("two_chains.crn")


@pytest.fixture(scope="session")
def mass_action_demo():
    return load("mass_action_demo.crn")


@pytest.fixture(scope="session")
def purine():
    return load("purine.crn")
