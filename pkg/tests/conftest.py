import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


# -- acceptance summary -------------------------------------------------------

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(id, ok, detail)``."""

    def record(cid: str, ok: bool, detail: str = "") -> bool:
        line = f"{cid} {'PASS' if ok else 'FAIL'}" + (f": {detail}" if detail else "")
        print(line)
        _ACCEPTANCE.append((cid, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{cid} {'PASS' if ok else 'FAIL'}" + (f": {detail}" if detail else ""))
