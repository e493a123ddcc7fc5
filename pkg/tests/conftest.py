import pytest

from modgraphs import Instance, parse_descriptor


def make_instance(module_text, ring_text=None, **kwargs):
    _ring, module = parse_descriptor(module_text, ring_text)
    return Instance(module, **kwargs)


@pytest.fixture(scope="session")
def z12():
    return make_instance("Z12")


@pytest.fixture(scope="session")
def z6():
    return make_instance("Z6")


@pytest.fixture(scope="session")
def z16():
    return make_instance("Z16")


@pytest.fixture(scope="session")
def z2z4():
    # the three-minimal module where the naive universal-vertex reading breaks
    return make_instance("Z2xZ4", "Z4")
