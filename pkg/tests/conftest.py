import pytest

from perfcodes import kernels
from perfcodes.codes import overline_h, puncture
from perfcodes.gf import make_field
from perfcodes.partition import odd_class_partition
from perfcodes.product import identity_perm, doubled_product_code


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    kernels.warmup()


@pytest.fixture(scope="session")
def field3():
    return make_field(3)


@pytest.fixture(scope="session")
def field4():
    return make_field(4)


@pytest.fixture(scope="session")
def h7(field3):
    return puncture(overline_h(field3), 0)


@pytest.fixture(scope="session")
def h15(field4):
    return puncture(overline_h(field4), 0)


@pytest.fixture(scope="session")
def partition3(field3):
    return odd_class_partition(field3)


@pytest.fixture(scope="session")
def product_identity(partition3):
    return doubled_product_code(partition3, identity_perm(partition3.n))
