"""Shared test fixtures."""
import pytest

from smlab.models.config import RunConfig
from smlab.models.specs import MeansSpec, QuadratureSpec, TestFunctionSpec
from smlab.regions.atlas import ExponentAtlas


@pytest.fixture
def quad():
    """Desk-default composite rule."""
    return QuadratureSpec()

@pytest.fixture
def quick_quad():
    """Quick preset rule: 12 nodes, pi radians per panel."""
    return RunConfig.from_preset("quick").quad

@pytest.fixture
def spec_2d():
    return MeansSpec(0.2, 2)

@pytest.fixture
def spec_3d():
    return MeansSpec(0.0, 3)

@pytest.fixture
def tf_2d(spec_2d):
    return TestFunctionSpec(spec_2d, 64.0)

@pytest.fixture
def atlas():
    return ExponentAtlas.load()

