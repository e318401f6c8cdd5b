import pytest

from helpers import EXAMPLE1_DIMACS


@pytest.fixture
def example1_path(tmp_path):
    path = tmp_path / "example1.cnf"
    path.write_text(EXAMPLE1_DIMACS)
    return str(path)
