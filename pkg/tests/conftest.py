from pathlib import Path

import pytest

from heegaard_rr.presentations import Presentation
from heegaard_rr.rrdiagram import load

DATA = Path(__file__).resolve().parent.parent / "src" / "heegaard_rr" / "data"

STAGE0 = "<A,C,D,E | A^5De^3, dA^2cA^2e^2, DC^2DC^3, A^7Dc(A^7DcA^7cA^2c)^2>"
STAGE1 = "<A,C,E | A^7cA^2e^5, a^5E^3C^2a^5E^3C^3, A^2E^3c(A^2E^3cA^7cA^2c)^2>"
STAGE2 = "<A,E | A^9e^5(A^2E^3A^2e^5A^9e^5)^2, E^8a^7(E^8a^7E^5a^2E^5a^7)^2>"
STAGE3 = "<A,B | A^8B^7(A^8B^7A^5B^2A^5B^7)^2, A^5B^9(A^5B^9A^5B^2a^3B^2)^2>"


@pytest.fixture(scope="session")
def stage3():
    return Presentation.parse(STAGE3)


@pytest.fixture(scope="session")
def fig9a():
    return load(DATA / "fig9a.json")


@pytest.fixture(scope="session")
def fig9b():
    return load(DATA / "fig9b.json")
