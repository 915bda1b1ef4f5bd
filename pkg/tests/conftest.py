import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kaczframe import _kernels  # noqa: E402
from kaczframe.systems import generate_system  # noqa: E402


@pytest.fixture(params=_kernels.available_backends())
def backend(request):
    return _kernels.get_backend(request.param)


@pytest.fixture
def remark():
    return generate_system("remark", 4, 4)


@pytest.fixture
def repeated():
    return generate_system("repeated_vector", 3, 4, 7)


@pytest.fixture
def onb4():
    return generate_system("onb", 4, 4, 1)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS, key=lambda k: (int("".join(c for c in k if c.isdigit())), k)):
        terminalreporter.write_line(mod.RESULTS[key])
