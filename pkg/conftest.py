"""
Collects the mamba specs (Tests/specs/**/*_spec.py) for pytest. Each spec file becomes one pytest item that runs the
file with mamba, the same way run_tests.sh does, and fails when mamba reports a failure.
"""
import os
import subprocess
import sys

import pytest

ROOT = os.path.dirname(os.path.abspath(__file__))
SPECS = os.path.join(ROOT, "Tests", "specs")


def pytest_collect_file(parent, file_path):
    path = str(file_path)
    if file_path.name.endswith("_spec.py") and path.startswith(SPECS + os.sep):
        return MambaSpecFile.from_parent(parent, path=file_path)
    return None


class MambaSpecFile(pytest.File):
    def collect(self):
        yield MambaSpecItem.from_parent(self, name=self.path.stem)


class MambaSpecItem(pytest.Item):
    def runtest(self):
        env = dict(os.environ)
        env["PYTHONPATH"] = os.pathsep.join(filter(None, [ROOT, os.path.join(ROOT, "Tests"), env.get("PYTHONPATH")]))
        result = subprocess.run(
            [sys.executable, "-m", "mamba.cli", "--format", "documentation", str(self.path)],
            cwd=ROOT,
            env=env,
            capture_output=True,
            text=True,
        )
        if result.returncode != 0:
            raise MambaSpecFailure(result.stdout + result.stderr)

    def repr_failure(self, excinfo):
        if isinstance(excinfo.value, MambaSpecFailure):
            return str(excinfo.value)
        return super().repr_failure(excinfo)

    def reportinfo(self):
        return self.path, 0, "mamba spec: {}".format(self.name)


class MambaSpecFailure(Exception):
    pass
