import pytest

from anc_sieve.config import (
    AncConfig,
    EnumerationConfig,
    EnumerationStrategy,
    get_config,
    set_config,
)


def small_config() -> AncConfig:
    """Single worker, block strategy, enumeration up to n + m = 10."""
    return AncConfig(
        enumeration=EnumerationConfig(
            max_total=10, strategy=EnumerationStrategy.BLOCKS, workers=1
        )
    )


@pytest.fixture(scope="session", autouse=True)
def single_worker_config():
    set_config(small_config())
    yield


@pytest.fixture
def restore_config():
    """For tests that replace the active configuration (the CLI does)."""
    previous = get_config()
    yield
    set_config(previous)


@pytest.fixture
def two_connected_cycles() -> str:
    """The (9,6) example with two connected cycles, one exterior and one interior cycle."""
    return "(1,2,3,6,15,10,11)(4,5)(7,8,9,13,14)(12)"
