from hypothesis import settings

settings.register_profile("extnum", deadline=None, max_examples=100)
settings.load_profile("extnum")

# lines recorded by the acceptance suite, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
