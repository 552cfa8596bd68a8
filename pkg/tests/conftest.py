import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repro", derandomize=True, max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repro")


@pytest.fixture(scope="session")
def moonshine():
    from framedvoa.structure import build_moonshine_descriptor

    return build_moonshine_descriptor()


@pytest.fixture(scope="session")
def baby():
    from framedvoa.structure import build_baby_descriptor

    return build_baby_descriptor()


@pytest.fixture(scope="session")
def triple50():
    from framedvoa.characters import solve_baby_characters

    return solve_baby_characters(50)


@pytest.fixture(scope="session")
def triple200():
    from framedvoa.characters import solve_baby_characters

    return solve_baby_characters(200)
