import subprocess
import sys

import pytest


def _cli(args, out):
    """Invoke the dataset-producing CLI as an external process."""
    subprocess.run([sys.executable, "-m", "warptunnel.cli", *args,
                    "--out", str(out)], check=True)


@pytest.fixture(scope="session")
def csv_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("csv")
    _cli(["figures", "fig2"], d / "fig2.csv")
    _cli(["figures", "fig3"], d / "fig3.csv")
    _cli(["figures", "fig4"], d / "fig4.csv")
    _cli(["figures", "fig5", "--n0", "0.7"], d / "fig5.csv")
    return d
