"""Shared acceptance bookkeeping.

Each acceptance test records its verdict here before asserting, so the
run always ends with one visible PASS/FAIL line per criterion even
though pytest captures ordinary output.
"""

ACCEPTANCE_SLUGS = [
    "main-theorem-typeA",
    "main-theorem-BCD",
    "regular-nilpotent-transversal",
    "subregular-A",
    "subregular-B",
    "rep-correctness",
    "oracle-equivalence",
    "stability",
]

RESULTS = {}


def record(slug, ok, detail=""):
    assert slug in ACCEPTANCE_SLUGS, "unknown acceptance slug %r" % slug
    RESULTS[slug] = bool(ok)
    assert ok, "acceptance criterion %s failed%s" % (
        slug,
        ": %s" % detail if detail else "",
    )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for slug in ACCEPTANCE_SLUGS:
        if slug not in RESULTS:
            terminalreporter.write_line("ACCEPTANCE %s: NOT RUN" % slug)
        else:
            verdict = "PASS" if RESULTS[slug] else "FAIL"
            terminalreporter.write_line("ACCEPTANCE %s: %s" % (slug, verdict))
