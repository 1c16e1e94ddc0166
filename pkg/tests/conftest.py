import pytest

_results_key = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_results_key] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line, print it, then assert on it."""
    lines = request.config.stash[_results_key]

    def record(number, title, ok, detail=""):
        line = "criterion %2d %s: %s%s" % (number, "PASS" if ok else "FAIL", title, " (%s)" % detail if detail else "")
        lines.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_results_key, [])
    if lines:
        terminalreporter.section("acceptance")
        for line in sorted(lines):
            terminalreporter.write_line(line)
