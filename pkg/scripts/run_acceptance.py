"""Run the acceptance suite and print only the per-criterion summary lines."""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main():
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", str(ROOT / "tests" / "test_acceptance.py")],
                          capture_output=True, text=True, cwd=ROOT)
    lines = [x for x in proc.stdout.splitlines() if x.startswith("CRITERION")]
    print("\n".join(lines))
    print(proc.stdout.splitlines()[-1] if proc.stdout else "no output")
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main())
