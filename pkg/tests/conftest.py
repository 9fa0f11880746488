import contextlib
import os
import time

import pytest
from hypothesis import HealthCheck, settings

import oracles

settings.register_profile("default", settings(max_examples=150, deadline=None,
                                              suppress_health_check=[HealthCheck.too_slow]))
settings.register_profile("ci", settings(max_examples=40, deadline=None))
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def sig():
    return oracles.make_signature()


# -- acceptance criteria: one pass/fail line each in the terminal summary ------

ACCEPTANCE = []


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.failures, self.notes, self.elapsed = [], [], 0.0

    def check(self, ok, what):
        if not ok:
            self.failures.append(what)
        return ok

    def note(self, text):
        self.notes.append(text)

    def line(self):
        ok = not self.failures and self.elapsed < self.limit
        detail = "; ".join(self.failures[:3] if self.failures else self.notes)
        return (f"criterion {self.number} {self.title}: {'PASS' if ok else 'FAIL'} "
                f"({self.elapsed:.2f} s, limit {self.limit} s) {detail}")


@pytest.fixture
def criterion():
    @contextlib.contextmanager
    def run(number, title, limit):
        c = Criterion(number, title, limit)
        start = time.perf_counter()
        try:
            yield c
        except Exception as exc:
            c.failures.append(f"{type(exc).__name__}: {exc}")
            raise
        finally:
            c.elapsed = time.perf_counter() - start
            ACCEPTANCE.append(c)
            print(c.line())
        assert not c.failures, c.failures
        assert c.elapsed < limit, f"took {c.elapsed:.2f} s, limit {limit} s"
    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(ACCEPTANCE, key=lambda c: c.number):
        terminalreporter.write_line(c.line())
