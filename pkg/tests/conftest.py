def pytest_addoption(parser):
    parser.addoption(
        "--n5", action="store_true", default=False,
        help="extend the exhaustive theorem sweep to all 6942 spaces on 5 points",
    )


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(results.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {name}: {detail}")
