from __future__ import annotations

from pathlib import Path

import pytest

from coop_safety.catalog import default_catalog_path, load_catalog
from coop_safety.dsl import parse_model
from coop_safety.report import PipelineConfig, run_pipeline

PKG_DATA = Path(__file__).resolve().parents[1] / "src" / "coop_safety" / "data"
FIXTURE_DIR = PKG_DATA / "platooning"
FIXTURE_FILES = sorted(FIXTURE_DIR.glob("*.cs"))
DIAG_DIR = Path(__file__).resolve().parent / "fixtures" / "diagnostics"


@pytest.fixture(scope="session")
def catalog():
    return load_catalog(default_catalog_path())


@pytest.fixture(scope="session")
def fixture_model(catalog):
    model, diags = parse_model(FIXTURE_FILES, catalog=catalog)
    assert not [d for d in diags if d.is_error], [d.format() for d in diags]
    return model


@pytest.fixture(scope="session")
def fixture_report():
    return run_pipeline(PipelineConfig(FIXTURE_FILES))


@pytest.fixture(scope="session")
def fixture_doc(fixture_report):
    return fixture_report.to_dict()


@pytest.fixture(autouse=True)
def _no_catalog_env(monkeypatch):
    monkeypatch.delenv("COOP_SAFETY_CATALOG", raising=False)
