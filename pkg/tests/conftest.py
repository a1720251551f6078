import os
import tempfile

# keep test runs away from the user's cache; set before gctkit reads it
os.environ.setdefault("GCTKIT_CACHE_DIR", tempfile.mkdtemp(prefix="gctkit-test-cache-"))

from hypothesis import HealthCheck, settings  # noqa: E402

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        passed, detail = results[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if passed else 'FAIL'} {detail}".rstrip())
