
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _isolated_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("WGCALC_CACHE_DIR", str(tmp_path / "cache"))


_CRITERIA: dict[int, list[bool]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    k = getattr(report, "criterion", None)
    if k is not None:
        _CRITERIA.setdefault(k, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        status = "PASS" if all(_CRITERIA[k]) else "FAIL"
        terminalreporter.write_line(f"criterion {k}: {status} ({len(_CRITERIA[k])} checks)")
