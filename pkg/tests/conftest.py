import pytest

from spantree.corpus import disconnected_corpus, standard_corpus

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def disconnected():
    return disconnected_corpus()


@pytest.fixture
def record_criterion():
    def record(label: str, ok: bool, detail: str = ""):
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
