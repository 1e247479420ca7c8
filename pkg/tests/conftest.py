def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, verdict_line
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(verdict_line(n, *RESULTS[n]))
