import time

import numpy as np
import pytest

SESSION_START = pytest.StashKey[float]()


def pytest_sessionstart(session):
    session.config.stash[SESSION_START] = time.perf_counter()


def pytest_collection_modifyitems(config, items):
    # acceptance checks run last, so the final one sees the whole suite's runtime
    items.sort(key=lambda item: item.path.name == "test_acceptance.py")

from se3tangent.so3 import skew


def random_screw(rng, lo=1e-3, hi=3.0, y_scale=1.0):
    """Screw with rotation norm log-uniform in [lo, hi] and normal translation."""
    x = rng.normal(size=3)
    x *= 10 ** rng.uniform(np.log10(lo), np.log10(hi)) / np.linalg.norm(x)
    return np.concatenate([x, y_scale * rng.normal(size=3)])


def screw_with_norm(rng, phi, y_scale=1.0):
    x = rng.normal(size=3)
    return np.concatenate([phi * x / np.linalg.norm(x), y_scale * rng.normal(size=3)])


def rot_z(a):
    c, s = np.cos(a), np.sin(a)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def maxabs(a):
    return float(np.max(np.abs(a)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


__all__ = ["random_screw", "screw_with_norm", "rot_z", "maxabs", "skew"]
