import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=400,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    from support import ACCEPTANCE_RESULTS

    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, passed, seconds in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {num}. {title} ({seconds:.1f} s)")
