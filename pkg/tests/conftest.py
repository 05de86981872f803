import pytest

from tverskyci import replication_estimates, run_simulation

from tests._reference import REFERENCE_CONFIG


@pytest.fixture(scope="session")
def reference_simulation():
    """Report and per-replication estimates of the reference experiment,
    run once per session."""
    report = run_simulation(REFERENCE_CONFIG)
    estimates = replication_estimates(REFERENCE_CONFIG)
    return report, estimates
