import numpy as np
import pytest

from hardylab import CircleGrid, signal_from_values

FULL_SIZE = 2 ** 14


@pytest.fixture(scope="session")
def grid() -> CircleGrid:
    """The production-resolution grid shared by the expensive tests."""
    return CircleGrid(FULL_SIZE)


@pytest.fixture(scope="session")
def small_grid() -> CircleGrid:
    return CircleGrid(512)


def make_signal(grid: CircleGrid, fn):
    return signal_from_values(grid, np.asarray(fn(grid.nodes), dtype=complex))
