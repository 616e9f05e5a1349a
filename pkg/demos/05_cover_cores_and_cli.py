"""Cover-critical cores and the command line round trip.

A cover-critical core keeps the covering number of the full family with as
few edges as single-edge deletion allows.  The second half drives the CLI
in-process: generate, check with a certificate, verify.
"""

import json
import tempfile
from pathlib import Path

from hyperkonig import cofinite_family, cover_critical_core, covering_number, induced
from hyperkonig.cli import run

H = cofinite_family(5, 1)
core = cover_critical_core(H)
print("covering number", covering_number(H)[0].nu, "kept by", [H.edges[i] for i in core])
print("core covering number", covering_number(induced(H, core)[0])[0].nu)

with tempfile.TemporaryDirectory() as tmp:
    inst = Path(tmp, "c6.hg")
    cert = Path(tmp, "c6.json")
    run(["generate", "cycle", "6", "-o", str(inst)])
    print(inst.read_text(), end="")
    print("check exit", run(["check", "konig", str(inst), "--certificate", str(cert)]))
    print(json.loads(cert.read_text()))
    print("verify exit", run(["verify", str(inst), str(cert)]))
