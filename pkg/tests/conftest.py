import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "gsl",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("gsl")


@pytest.fixture(scope="session")
def covers():
    from gsl.covers import bundled_covers

    return bundled_covers()


@pytest.fixture(scope="session")
def branch_table(covers):
    from gsl.covers import branch_points

    return {name: branch_points(c) for name, c in covers.items()}


@pytest.fixture(scope="session")
def bad_table(covers):
    from gsl.covers import conservative_bad_primes

    return {name: conservative_bad_primes(c) for name, c in covers.items()}
