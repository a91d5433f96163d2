"""Shared fixtures. Session scope: everything here is immutable."""

from __future__ import annotations

import pytest

from doilykit.correspondence import (
    duad_vector_bijection,
    module_geometry,
    relabel_doily,
    right_module_mirror,
)
from doilykit.incidence import build_doily
from doilykit.ring import canonical_ring


@pytest.fixture(scope="session")
def ring():
    return canonical_ring()


@pytest.fixture(scope="session")
def doily():
    return build_doily()


@pytest.fixture(scope="session")
def relabeled(doily):
    return relabel_doily(doily, duad_vector_bijection())


@pytest.fixture(scope="session")
def left_geometry(ring, relabeled):
    return module_geometry(ring, "left", relabeled)


@pytest.fixture(scope="session")
def mirror(ring, left_geometry):
    return right_module_mirror(ring, left_geometry)
