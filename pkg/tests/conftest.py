from test_acceptance import RESULTS_KEY


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(RESULTS_KEY, None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        checks = results[number]
        bad = [r for r in checks if not r.passed]
        status = "PASS" if not bad else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status} ({len(checks) - len(bad)}/{len(checks)} checks)")
        for r in bad:
            terminalreporter.write_line("    " + r.line())
