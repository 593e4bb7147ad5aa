import pytest

_CRITERIA: dict[str, list[bool]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance check under a criterion label."""
    label = request.node.get_closest_marker("criterion").args[0]
    outcomes = _CRITERIA.setdefault(label, [])
    outcomes.append(False)
    slot = len(outcomes) - 1

    class _Recorder:
        def ok(self):
            outcomes[slot] = True

    return _Recorder()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test belongs to")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: (int(s.split()[0]), s)):
        outcomes = _CRITERIA[label]
        status = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {label} ({sum(outcomes)}/{len(outcomes)} checks)")
