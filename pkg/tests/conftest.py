import pytest

from confhodge import dgcomplex, genfun

_criteria: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def cold_caches():
    """Drop memoized expansions and block ranks so timings start cold."""
    for fn in (genfun.expand_surface, dgcomplex.subsets, dgcomplex._differential_block,
               dgcomplex.block_cohomology_dims):
        fn.cache_clear()
    yield


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        extra = getattr(item, "criterion_note", "")
        _criteria[number] = ("PASS" if rep.passed else "FAIL", title, extra)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status, title, extra = _criteria[n]
        terminalreporter.write_line(f"{status}  {n:2d}. {title}" + (f"  ({extra})" if extra else ""))
