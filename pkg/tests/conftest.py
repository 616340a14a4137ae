from __future__ import annotations

import csv
import sys
from pathlib import Path

import numpy as np
import pytest

from qpack.cluster import TAU, GroupSpec, build_cluster
from qpack.embed import embed
from qpack.generate import generate_standard
from qpack.modified import ModifiedConfig, default_delta, generate_modified
from qpack.strip import make_strip

DATA = Path(__file__).parent / "data"


def read_picture(name: str) -> list[tuple[float, float, str]]:
    with (DATA / name).open(newline="") as fh:
        return [(float(r["x"]), float(r["y"]), r["marker"]) for r in csv.DictReader(fh)]


@pytest.fixture(scope="session")
def c12():
    return build_cluster(GroupSpec.cyclic(12), [(1.0, 0.0)])


@pytest.fixture(scope="session")
def c12_emb(c12):
    return embed(c12)


@pytest.fixture(scope="session")
def fig3_spec(c12_emb):
    return make_strip(c12_emb, 0.1, 9.0, 6000)


@pytest.fixture(scope="session")
def fig3_pattern(fig3_spec):
    return generate_standard(fig3_spec)


@pytest.fixture(scope="session")
def fig4_pattern(fig3_spec, c12):
    return generate_modified(ModifiedConfig(fig3_spec, 50.0, default_delta(c12)))


@pytest.fixture(scope="session")
def c8_emb():
    return embed(build_cluster(GroupSpec.cyclic(8), [(1.0, 0.0)]))


@pytest.fixture(scope="session")
def ico1_emb():
    return embed(build_cluster(GroupSpec.icosahedral(), [(1.0, TAU, 0.0)]))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
