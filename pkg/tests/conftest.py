import pytest

_ACCEPTANCE = []


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("GBSCLASS_CACHE_DIR", str(tmp_path / "cache"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    criterion = item.get_closest_marker("criterion")
    if criterion is None or report.when != "call" and not (report.when == "setup" and report.failed):
        return
    _ACCEPTANCE.append((criterion.args[0], item.name, report.outcome, report.duration))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by a test")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    grouped = {}
    for label, name, outcome, duration in _ACCEPTANCE:
        grouped.setdefault(label, []).append((name, outcome, duration))
    for label in sorted(grouped):
        runs = grouped[label]
        passed = sum(outcome == "passed" for _, outcome, _ in runs)
        status = "PASS" if passed == len(runs) else "FAIL"
        seconds = sum(duration for _, _, duration in runs)
        failed = [name for name, outcome, _ in runs if outcome != "passed"]
        detail = f"  failed: {', '.join(failed)}" if failed else ""
        terminalreporter.write_line(f"{status}  {label}  {passed}/{len(runs)} checks  ({seconds:.2f}s){detail}")
