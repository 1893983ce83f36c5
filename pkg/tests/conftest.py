import sys

import pytest

from skewtca import kernels


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request):
    """Each importable kernel implementation in turn."""
    return kernels.backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
