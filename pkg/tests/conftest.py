import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact-algebra",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact-algebra")


@pytest.fixture(scope="session")
def plane_ring():
    from ulrich_forge import PolyRing

    return PolyRing(("x", "y"))
