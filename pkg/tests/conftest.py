import pytest

from percmoments import generate_builtin


@pytest.fixture(scope="session")
def k2():
    return generate_builtin("complete(2)")


@pytest.fixture(scope="session")
def k3():
    return generate_builtin("complete(3)")


@pytest.fixture(scope="session")
def tetrahedron():
    return generate_builtin("tetrahedron")


@pytest.fixture(scope="session")
def cube():
    return generate_builtin("cube")


@pytest.fixture(scope="session")
def octahedron():
    return generate_builtin("octahedron")


@pytest.fixture(scope="session")
def dodecahedron():
    return generate_builtin("dodecahedron")
