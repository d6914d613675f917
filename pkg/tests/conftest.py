import os

import pytest
from hypothesis import HealthCheck, settings

import ed_config
import ed_logger
import run_logger
from element_parser import parse_element
from ring_instances import make_ring

# isolated_logs is autouse and function scoped; it only resets singletons
SUPPRESSED = [HealthCheck.too_slow, HealthCheck.function_scoped_fixture]
settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=SUPPRESSED)
settings.register_profile("fast", max_examples=15, deadline=None, suppress_health_check=SUPPRESSED)
settings.register_profile("ci", max_examples=200, deadline=None, suppress_health_check=SUPPRESSED)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(autouse=True)
def isolated_logs(tmp_path, monkeypatch):
    """Logs and run logs go to a temp dir; config singletons are reset per test."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setattr(ed_config, "_ed_config", None)
    monkeypatch.setattr(ed_logger, "_ed_logger", None)
    monkeypatch.setattr(run_logger, "_run_logger", None)
    yield


@pytest.fixture
def zz():
    return make_ring({"kind": "Int"})


@pytest.fixture
def zmod12():
    return make_ring({"kind": "IntMod", "params": {"n": 12}})


@pytest.fixture
def qx():
    return make_ring({"kind": "PolyRat"})


@pytest.fixture
def f2x():
    return make_ring({"kind": "PolyFp", "params": {"p": 2}})


@pytest.fixture
def f4_skew():
    return make_ring({"kind": "SkewPolyFq", "params": {"p": 2, "n": 2, "twist": 1}})


@pytest.fixture
def hx():
    return make_ring({"kind": "QuatPoly"})


@pytest.fixture
def el():
    """el(ring, "x^2 + 1") parses an element."""
    return parse_element
