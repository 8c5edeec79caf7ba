from __future__ import annotations

import pytest

from exseq import _kernels_py, kernels

ACCEPTANCE_LINES: list[str] = []

BACKENDS = [pytest.param(_kernels_py, id="python")]
if kernels.compiled_backend is not None:
    BACKENDS.append(pytest.param(kernels.compiled_backend, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
