import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ribbonminor import EnumerationSpec, enumerate_presentations


@pytest.fixture(scope="session")
def sweep2():
    return enumerate_presentations(EnumerationSpec(2, 4, True))


@pytest.fixture(scope="session")
def sweep3():
    return enumerate_presentations(EnumerationSpec(3, 4, True))
