"""Functional safety assessment for cooperative driving architectures.

The pipeline turns declarative model files (scenario functions, operational
modes and situations, functional architectures, fault trees and a technical
architecture inventory) into ASIL-rated functional safety requirements and
checks them against the safety tactics implemented in the technical
architecture.
"""

__version__ = "0.1.0"

from coop_safety.catalog import Catalog, determine_asil, load_catalog
from coop_safety.conformance import applicable_tactics, assess, detect_conflicts
from coop_safety.dsl import parse_fault_trees, parse_model
from coop_safety.fta import derive_fsrs, minimal_cut_sets
from coop_safety.hara import derive_goals, enumerate_events, generate_hazards
from coop_safety.model import Asil, GuideWord, Model, Perspective
from coop_safety.report import render, run_model, run_pipeline
from coop_safety.validation import validate_model

__all__ = [
    "Asil",
    "Catalog",
    "GuideWord",
    "Model",
    "Perspective",
    "applicable_tactics",
    "assess",
    "derive_fsrs",
    "derive_goals",
    "detect_conflicts",
    "determine_asil",
    "enumerate_events",
    "generate_hazards",
    "load_catalog",
    "minimal_cut_sets",
    "parse_fault_trees",
    "parse_model",
    "render",
    "run_model",
    "run_pipeline",
    "validate_model",
]
