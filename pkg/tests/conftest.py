from hypothesis import settings

settings.register_profile("suite", max_examples=25, deadline=None)
settings.load_profile("suite")

_ACCEPTANCE = "test_acceptance.py"


def pytest_collection_modifyitems(config, items):
    labels = {}
    for item in items:
        if _ACCEPTANCE in item.nodeid:
            doc = (getattr(item.obj, "__doc__", None) or "").strip()
            labels[item.nodeid] = doc.splitlines()[0] if doc else item.name
    config._acceptance_labels = labels


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    labels = getattr(config, "_acceptance_labels", {})
    if not labels:
        return
    results = {}
    for status, verdict in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL"), ("skipped", "SKIP")):
        for report in terminalreporter.stats.get(status, ()):
            nodeid = getattr(report, "nodeid", "")
            if nodeid not in labels:
                continue
            if verdict == "PASS" and getattr(report, "when", "call") != "call":
                continue
            if results.get(nodeid) != "FAIL":
                results[nodeid] = verdict
    terminalreporter.section("acceptance criteria")
    for nodeid, label in labels.items():
        terminalreporter.write_line(f"{results.get(nodeid, 'FAIL'):<4}  {label}")
