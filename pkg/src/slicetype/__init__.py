"""slicetype: a circular merging soft keyboard engine for dwell-based
(gaze-style) text entry, with word-prediction tries, movement-difficulty
analysis, a jittered-input simulator, and a live session service."""

__version__ = "0.1.0"

from slicetype.corpus import NgramModel, Prediction, build_model, default_model
from slicetype.geometry import (
    AnnularSector,
    CornerKey,
    KeyRegion,
    LayoutState,
    default_layout,
    distance,
    effective_width,
    hit_test,
    target_center,
)
from slicetype.merging import MergePlan, adjacency, apply_plan, plan_merge
from slicetype.engine import Mode, SessionEvent, TypingSession
from slicetype.fitts import Condition, FittsReport, analyze, index_of_difficulty
from slicetype.simulate import JitterModel, SimResult, simulate_typing

__all__ = [
    "AnnularSector",
    "Condition",
    "CornerKey",
    "FittsReport",
    "JitterModel",
    "KeyRegion",
    "LayoutState",
    "MergePlan",
    "Mode",
    "NgramModel",
    "Prediction",
    "SessionEvent",
    "SimResult",
    "TypingSession",
    "adjacency",
    "analyze",
    "apply_plan",
    "build_model",
    "default_layout",
    "default_model",
    "distance",
    "effective_width",
    "hit_test",
    "index_of_difficulty",
    "plan_merge",
    "simulate_typing",
    "target_center",
]
