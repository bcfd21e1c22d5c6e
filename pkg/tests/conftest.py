import sys

import pytest

from ribbon.core import make_presentation
from ribbon.corpus import default_corpus


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture
def loop():
    return make_presentation(["e1+ e1+"])


@pytest.fixture
def twisted_loop():
    return make_presentation(["e1+ e1-"])


@pytest.fixture
def interlaced():
    return make_presentation(["e1+ e2+ e1+ e2+"])


def pytest_terminal_summary(terminalreporter):
    for mod in list(sys.modules.values()):
        if getattr(mod, "__file__", "") and mod.__file__.endswith("test_acceptance.py"):
            lines = mod.summary_lines()
            if lines:
                terminalreporter.section("acceptance criteria")
                for line in lines:
                    terminalreporter.write_line(line)
            break
