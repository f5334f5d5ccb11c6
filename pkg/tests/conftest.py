import pytest

from ringlab import catalog_build, direct_product


@pytest.fixture(scope="session")
def z4():
    return catalog_build("modint", 4)


@pytest.fixture(scope="session")
def z6():
    return catalog_build("modint", 6)


@pytest.fixture(scope="session")
def gf2():
    return catalog_build("gf", 2)


@pytest.fixture(scope="session")
def gf3():
    return catalog_build("gf", 3)


@pytest.fixture(scope="session")
def ex31():
    return catalog_build("example31", 2)


@pytest.fixture(scope="session")
def ternions2():
    return catalog_build("ternions", 2)


@pytest.fixture(scope="session")
def ternions3():
    return catalog_build("ternions", 3)


@pytest.fixture(scope="session")
def t3_2():
    return catalog_build("t3", 2)


@pytest.fixture(scope="session")
def charp2_2():
    return catalog_build("char_p2", 2, law_check_cap=16)


@pytest.fixture(scope="session")
def mat2_2():
    return catalog_build("matn", 2, k=2)


@pytest.fixture(scope="session")
def z2xz3():
    return direct_product([catalog_build("gf", 2), catalog_build("gf", 3)])
