from pathlib import Path

import pytest

from skewing.foundation import QPoly
from skewing.poset import NUIO

GOLDEN_DIR = Path(__file__).parent / "golden"


def qpoly(*coeffs):
    """qpoly(a0, a1, a2, ...) = a0 + a1 q + a2 q^2 + ..."""
    return QPoly({exp: c for exp, c in enumerate(coeffs)})


@pytest.fixture
def worked_poset():
    # i <_P j iff j - i >= 2
    return NUIO((2, 3, 4, 5, 5))


@pytest.fixture
def worked_beta():
    return (1, 1, 2, 1, 1)


@pytest.fixture
def worked_expansion():
    return {
        (3, 2, 1): qpoly(0, 0, 0, 1),
        (3, 3): qpoly(0, 0, 1, 1, 1),
        (4, 1, 1): qpoly(0, 0, 1, 1, 1),
        (4, 2): qpoly(0, 0, 1, 2, 1),
        (5, 1): qpoly(0, 2, 3, 3, 3, 2),
        (6,): qpoly(1, 2, 2, 2, 2, 2, 1),
    }


@pytest.fixture
def run_cli(tmp_path, capsys):
    """Run the CLI in-process; returns (exit code, stdout)."""
    from skewing.cli import main

    def run(*argv):
        code = main(["--log-file", str(tmp_path / "skewing.log"), *argv])
        return code, capsys.readouterr().out

    return run
