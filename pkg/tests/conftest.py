import pytest

from dessins.dessin import NormalizedDessin, TreeDessin, VertexId


@pytest.fixture
def path():
    return TreeDessin.from_cycles(4, "(2 3)", "(1 2)(3 4)")


@pytest.fixture
def star():
    # dessin of 4z^4(1 - z^4)
    return TreeDessin.from_cycles(8, "(1 3 5 7)", "(1 2)(3 4)(5 6)(7 8)")


@pytest.fixture
def path_nd(path):
    return NormalizedDessin(path, VertexId("B", 1), VertexId("B", 4))


@pytest.fixture
def star_f(star):
    return NormalizedDessin(star, VertexId("B", 6), VertexId("B", 2))


@pytest.fixture
def star_g(star):
    return NormalizedDessin(star, VertexId("B", 6), VertexId("B", 4))
