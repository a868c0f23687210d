import pytest

# criterion number -> (passed, title, detail), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[n]
        line = f"{'PASS' if ok else 'FAIL'}  criterion {n:2d}: {title}"
        terminalreporter.write_line(f"{line}  [{detail}]" if detail else line)


@pytest.fixture
def criterion():
    """Record one acceptance criterion; the body raises on failure."""

    class Recorder:
        def __call__(self, n, title):
            self.n, self.title, self.detail = n, title, ""
            return self

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            ok = exc_type is None
            detail = self.detail if ok else (str(exc).splitlines() or [""])[0] or self.detail
            ACCEPTANCE[self.n] = (ok, self.title, detail)
            print(f"{'PASS' if ok else 'FAIL'}  criterion {self.n}: {self.title}")
            return False

    return Recorder()
