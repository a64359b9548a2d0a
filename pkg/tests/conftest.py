import numpy as np
import pytest

from symsax.classification import LabeledDataset


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_dataset(rng, n_instances, length, n_classes=3, name="rand"):
    """Class-dependent random walks, so 1NN has some signal to find."""
    labels = rng.integers(0, n_classes, size=n_instances)
    base = rng.normal(size=(n_classes, length)).cumsum(axis=1)
    X = base[labels] + rng.normal(scale=1.5, size=(n_instances, length)).cumsum(axis=1) * 0.3
    return LabeledDataset([f"c{v}" for v in labels], X, name)


@pytest.fixture
def make_dataset():
    return random_dataset


def pytest_terminal_summary(terminalreporter):
    from . import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_log.LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
