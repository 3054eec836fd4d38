import pytest

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for an acceptance criterion.

    The test sets ``rec.detail``; the line is marked PASS only if the test
    body finishes without raising.
    """

    class Record:
        detail = ""

    rec = Record()
    name = request.node.name
    ACCEPTANCE[name] = (False, "did not finish")
    yield rec
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    ACCEPTANCE[name] = (not failed, rec.detail)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
