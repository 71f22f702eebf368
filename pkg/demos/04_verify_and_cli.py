"""Seeded verification suites and the JSON certificates the CLI emits."""

import json
import subprocess
import sys
import tempfile

from skewpencil.verify import run_suite

checks = run_suite("algebra", seed=42, trials=3)
print(f"{sum(c.passed for c in checks)}/{len(checks)} algebra checks passed")
for c in checks[:5]:
    print(" ", c.name, "->", "ok" if c.passed else "FAILED")

# The same from the command line; identical seeds give identical certificates.
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump({"forms": [{"coeffs": [1, 0, 0]}, {"coeffs": [0, 0, 0]}, {"coeffs": [0, 1, 0]},
                         {"coeffs": [0, 0, 0]}, {"coeffs": [0, 0, 1]}]}, fh)
cmd = [sys.executable, "-m", "skewpencil", "odd-fiber", "--forms", fh.name, "--seed", "1"]
out = subprocess.run(cmd, capture_output=True, text=True)
cert = json.loads(out.stdout)
print("exit status", out.returncode, "| passed:", cert["passed"], "| outputs:", sorted(cert["outputs"]))
