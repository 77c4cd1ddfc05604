"""Movement-difficulty analysis: planning, index math, and report output."""

import csv
import io
import json
import math
import xml.etree.ElementTree as ET

import pytest

from slicetype.corpus import build_model
from slicetype.fitts import (
    ActionKind,
    Condition,
    FittsReport,
    analyze,
    index_of_difficulty,
    plan_actions,
    plan_path,
)
from slicetype.geometry import CORNER_SPACE, CORNER_STATUS, default_layout

PANGRAM = "the quick brown fox jumps over the lazy dog"


# ---------------------------------------------------------------------------
# index of difficulty
# ---------------------------------------------------------------------------


def test_index_of_difficulty_landmarks():
    assert index_of_difficulty(0.0, 0.5) == 0.0
    assert index_of_difficulty(0.5, 0.5) == pytest.approx(1.0)
    assert index_of_difficulty(1.5, 0.5) == pytest.approx(2.0)
    assert index_of_difficulty(3.5, 0.5) == pytest.approx(3.0)


def test_index_of_difficulty_rejects_bad_arguments():
    with pytest.raises(ValueError):
        index_of_difficulty(1.0, 0.0)
    with pytest.raises(ValueError):
        index_of_difficulty(1.0, -0.1)
    with pytest.raises(ValueError):
        index_of_difficulty(-1.0, 0.5)


# ---------------------------------------------------------------------------
# action planning
# ---------------------------------------------------------------------------


def test_no_prediction_plan_types_every_letter(tiny_model):
    actions = plan_actions(tiny_model, "the toy", Condition.NO_PRED_NO_MERGE)
    kinds = [a.kind for a in actions]
    letters = [a.letter for a in actions if a.kind is ActionKind.LETTER]
    assert letters == list("thetoy")
    assert kinds.count(ActionKind.SPACE) == 2
    assert ActionKind.COMPLETE not in kinds


def test_prediction_plan_completes_early(tiny_model):
    # t proposes the immediately: one held dwell enters the whole word
    actions = plan_actions(tiny_model, "the", Condition.PRED_NO_MERGE)
    assert [a.kind for a in actions] == [ActionKind.COMPLETE]
    assert actions[0].word == "the"
    assert actions[0].letter == "t"


def test_prediction_waits_until_proposal_matches(tiny_model):
    # toy is dominated by the/they/then until the o disambiguates it
    actions = plan_actions(tiny_model, "toy", Condition.PRED_NO_MERGE)
    kinds = [a.kind for a in actions]
    assert ActionKind.COMPLETE in kinds
    first_complete = kinds.index(ActionKind.COMPLETE)
    assert [a.letter for a in actions[: first_complete + 1]] == ["t", "o"]


def test_repeated_letter_inserts_one_nudge(tiny_model):
    actions = plan_actions(tiny_model, "winning", Condition.NO_PRED_NO_MERGE)
    kinds = [a.kind for a in actions]
    assert kinds.count(ActionKind.NUDGE) == 1
    nudge_at = kinds.index(ActionKind.NUDGE)
    # the nudge re-arms n between the two n dwells
    assert actions[nudge_at].letter == "n"
    assert actions[nudge_at - 1].letter == "n"
    assert actions[nudge_at + 1].letter == "n"


def test_malformed_words_rejected(tiny_model):
    with pytest.raises(ValueError):
        plan_actions(tiny_model, "don't", Condition.NO_PRED_NO_MERGE)
    with pytest.raises(ValueError):
        analyze("price: 3", tiny_model)


# ---------------------------------------------------------------------------
# movement paths
# ---------------------------------------------------------------------------


def test_path_is_continuous(model):
    # each step starts where the previous one landed; all targets keep
    # their base-layout center, so the chain is checkable from outside
    base = default_layout()
    centers = {k.letter: k.center for k in base.keys}
    centers |= {c.corner_id: c.center for c in base.corners}
    for condition in Condition:
        steps, _ = plan_path(model, PANGRAM, condition, space_policy="corner")
        assert steps[0].origin == (0.0, 0.0)
        for prev, step in zip(steps, steps[1:]):
            assert step.origin == centers[prev.target]


def test_merging_is_never_harder_per_step(model):
    base, merged = (
        plan_path(model, PANGRAM, Condition.NO_PRED_NO_MERGE)[0],
        plan_path(model, PANGRAM, Condition.NO_PRED_MERGE)[0],
    )
    assert len(base) == len(merged)
    for b, m in zip(base, merged):
        assert (b.kind, b.target, b.origin) == (m.kind, m.target, m.origin)
        assert m.width >= b.width - 1e-12
        assert m.difficulty <= b.difficulty + 1e-12


def test_out_of_model_word_falls_back_to_base_layout(tiny_model):
    steps, flags = plan_path(tiny_model, "zebra", Condition.NO_PRED_MERGE)
    assert any("zebra" in f for f in flags)
    # the unmerged layout carries every letter despite the empty merge
    assert [s.target for s in steps] == list("zebra")
    base_steps, _ = plan_path(tiny_model, "zebra", Condition.NO_PRED_NO_MERGE)
    assert [s.width for s in steps] == [s.width for s in base_steps]


def test_space_policy_corner_charges_word_boundaries(model):
    free = analyze(PANGRAM, model, space_policy="free")
    corner = analyze(PANGRAM, model, space_policy="corner")
    words = len(PANGRAM.split())
    for condition in (Condition.NO_PRED_NO_MERGE, Condition.NO_PRED_MERGE):
        n_free = len(free.steps[condition.value])
        n_corner = len(corner.steps[condition.value])
        assert n_corner == n_free + words
        assert corner.total(condition) > free.total(condition)
    assert any("space_policy=corner" in f for f in corner.flags)


def test_dedicated_area_round_trips_to_status_corner(tiny_model):
    steps, _ = plan_path(tiny_model, "the the", Condition.DEDICATED_AREA)
    # t discriminates from th onward: letter, glance, select (in place)
    assert [(s.kind, s.target) for s in steps[:2]] == [
        ("letter", "t"),
        ("check", CORNER_STATUS),
    ]
    # the selection happens at the corner: the next word starts there
    base = default_layout()
    assert steps[2].origin == base.corner_for(CORNER_STATUS).center
    assert steps[2].target == "t"


def test_condition_ordering_on_running_text(model):
    rep = analyze(PANGRAM, model)
    t = {c: rep.total(c) for c in Condition}
    assert t[Condition.PRED_MERGE] < t[Condition.NO_PRED_MERGE]
    assert t[Condition.NO_PRED_MERGE] < t[Condition.PRED_NO_MERGE]
    assert t[Condition.PRED_NO_MERGE] < t[Condition.NO_PRED_NO_MERGE]
    assert t[Condition.NO_PRED_NO_MERGE] < t[Condition.DEDICATED_AREA]
    saving = rep.prediction_saving_over_dedicated()
    assert 0.0 < saving < 1.0


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def test_empty_text_yields_zero_report(tiny_model):
    rep = analyze("", tiny_model)
    assert all(total == 0.0 for total in rep.totals().values())
    assert rep.prediction_saving_over_dedicated() == 0.0
    assert all(steps == [] for steps in rep.steps.values())
    json.loads(rep.to_json())  # serializes cleanly


def test_total_accepts_enum_and_string(model):
    rep = analyze("the", model)
    assert rep.total(Condition.PRED_MERGE) == rep.total("pred_merge")
    assert set(rep.totals()) == {c.value for c in Condition}


def test_condition_subset_report(model):
    rep = analyze("the", model, conditions=(Condition.PRED_MERGE,))
    assert list(rep.totals()) == ["pred_merge"]
    assert rep.to_dict()["prediction_saving_over_dedicated"] is None


def test_movement_time_is_linear_in_difficulty(model):
    rep = analyze("the quick", model)
    mt = rep.movement_time_totals(200.0, 150.0)
    for name, steps in rep.steps.items():
        expect = 200.0 * len(steps) + 150.0 * rep.total(name)
        assert mt[name] == pytest.approx(expect)


def test_csv_has_one_row_per_step(model):
    rep = analyze("the quick", model)
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert rows[0][:4] == ["condition", "index", "kind", "word"]
    assert len(rows) == 1 + sum(len(s) for s in rep.steps.values())
    # difficulties in the rows sum back to the report totals
    for name in rep.steps:
        total = sum(float(r[10]) for r in rows[1:] if r[0] == name)
        assert total == pytest.approx(rep.total(name), abs=1e-6)


def test_json_round_trip(model):
    rep = analyze("the quick", model, space_policy="corner")
    data = json.loads(rep.to_json())
    assert data["text"] == "the quick"
    assert data["space_policy"] == "corner"
    assert data["totals"].keys() == rep.totals().keys()
    for name, steps in data["steps"].items():
        assert len(steps) == len(rep.steps[name])


def test_svg_is_well_formed(model):
    rep = analyze("the", model)
    svg = rep.to_svg()
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    bars = [el for el in root.iter() if el.tag.endswith("rect")]
    assert len(bars) == 1 + len(rep.steps)  # background plus one per condition


def test_bad_space_policy_rejected(tiny_model):
    with pytest.raises(ValueError):
        plan_path(tiny_model, "the", Condition.PRED_MERGE, space_policy="both")
