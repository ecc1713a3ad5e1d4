import json
from pathlib import Path

import pytest

INSTANCES = Path(__file__).resolve().parent.parent / "fixtures" / "instances"


@pytest.fixture()
def instance_path():
    def _path(name: str) -> str:
        return str(INSTANCES / name)

    return _path


@pytest.fixture()
def run_cli(capsys):
    """Run the CLI and return (exit code, stdout, stderr)."""
    from src.cli.main import main

    def _run(*argv: str):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture()
def run_json(run_cli):
    def _run(*argv: str):
        code, out, err = run_cli(*argv)
        assert code == 0, err
        return json.loads(out)

    return _run
