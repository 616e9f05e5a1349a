import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# criterion label -> (status, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split(".")[0])):
        status, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{status}  {name}  ({detail})")
