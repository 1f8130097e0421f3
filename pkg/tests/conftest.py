import pytest
from hypothesis import HealthCheck, settings

from xmodlie.exact_linalg import FieldSpec

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

QQ = FieldSpec.rationals()
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=[QQ, F5], ids=["Q", "F5"])
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
