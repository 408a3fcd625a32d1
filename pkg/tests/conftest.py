import os
import subprocess
import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent
SRC_DIR = REPO_ROOT / "src"


@pytest.fixture(scope="session")
def run_cli():
    """Run the CLI in a subprocess with the src tree on PYTHONPATH."""

    def run(*argv: str, expect_code: int = 0) -> subprocess.CompletedProcess:
        env = dict(os.environ)
        extra = env.get("PYTHONPATH")
        env["PYTHONPATH"] = str(SRC_DIR) + (os.pathsep + extra if extra else "")
        proc = subprocess.run(
            [sys.executable, "-m", "admissible", *argv],
            capture_output=True,
            env=env,
        )
        assert proc.returncode == expect_code, (
            f"exit {proc.returncode} != {expect_code}; stderr: {proc.stderr!r}"
        )
        return proc

    return run
