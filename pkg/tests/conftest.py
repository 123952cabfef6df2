import random

import pytest

from singlink import _kernels


@pytest.fixture(params=_kernels.available_backends())
def kernels(request):
    """Raw kernel module for each backend that is importable."""
    return _kernels.get_backend(request.param)


@pytest.fixture
def rng():
    return random.Random(1234)
