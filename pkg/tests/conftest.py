from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from panelgls import CsvSchema, ModelSpec, load_panel_csv

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
SNAPSHOT = FIXTURE_DIR / "eu28_2010_2016.csv"

MODEL = ModelSpec(
    dependent="povertyrate",
    regressors=("inworkpovertyrate", "socialexp", "NEETsrates"),
    include_constant=True,
    sample=(2010, 2016),
)


@pytest.fixture(scope="session")
def snapshot():
    return load_panel_csv(SNAPSHOT, CsvSchema())


@pytest.fixture(scope="session")
def model_spec():
    return MODEL


@pytest.fixture()
def rng():
    return np.random.default_rng(20240601)


def make_toy_panel(rng: np.random.Generator, n_units: int = 6, n_periods: int = 4,
                   names: tuple[str, ...] = ("a", "b")):
    """Small random balanced panel for oracle comparisons."""
    from panelgls import PanelDataset

    units = tuple(f"U{i:02d}" for i in range(n_units))
    periods = tuple(range(2000, 2000 + n_periods))
    variables = {
        name: rng.normal(10.0, 2.0, size=(n_units, n_periods))
        for name in names
    }
    return PanelDataset(units, periods, variables)
