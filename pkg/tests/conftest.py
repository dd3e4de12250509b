import pytest
from hypothesis import settings

from catcenter.suite import load_suite

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def suite():
    return load_suite()
