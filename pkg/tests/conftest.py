import pytest

from polypoly.coloring import fit_band_action
from polypoly.geometry import build_fit, build_solid, rotation_group, solid_model


@pytest.fixture(scope="session")
def fit():
    return build_fit()


@pytest.fixture(scope="session")
def dodecahedron():
    return build_solid("dodecahedron")


@pytest.fixture(scope="session")
def groups():
    return {k: rotation_group(build_solid(k)) for k in ("tetrahedron", "cube", "dodecahedron")}


@pytest.fixture(scope="session")
def band_action():
    return fit_band_action()


@pytest.fixture(scope="session")
def tetra_model():
    return solid_model("tetrahedron")
