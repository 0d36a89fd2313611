import pytest

from graphalgo import _accel

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {line}")


@pytest.fixture(params=["numba", "python"] if _accel.HAVE_NUMBA else ["python"])
def backend(request):
    with _accel.use_backend(request.param):
        yield request.param
