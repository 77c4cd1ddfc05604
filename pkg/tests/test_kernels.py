import subprocess
import sys

import numpy as np
import pytest

from slicetype.geometry import default_layout
from slicetype.kernels import BACKEND, available_backends, classify_batch, classify_point
from slicetype.kernels import _purepy
from slicetype.merging import plan_merge

# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------


def test_a_backend_is_active():
    assert BACKEND in ("compiled", "python")
    assert "python" in available_backends()


def test_env_var_forces_pure_python_backend():
    code = (
        "from slicetype.kernels import BACKEND; "
        "assert BACKEND == 'python', BACKEND; print('ok')"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"SLICETYPE_KERNEL": "python", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0 and out.stdout.strip() == "ok"


def test_env_var_rejects_unknown_backend():
    code = "import slicetype.kernels"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"SLICETYPE_KERNEL": "turbo", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
    )
    assert out.returncode != 0


# ---------------------------------------------------------------------------
# backend equivalence
# ---------------------------------------------------------------------------


def _layout_pack_cases(model):
    base = default_layout()
    merged = plan_merge(model, base, "the", "qu").layout
    deep = plan_merge(model, base, None, "win").layout
    return [base.packed(), merged.packed(), deep.packed()]


def test_scalar_matches_pure_python_everywhere(model):
    rng = np.random.default_rng(11)
    xs = rng.uniform(-1.1, 1.1, 3000)
    ys = rng.uniform(-1.1, 1.1, 3000)
    for pack in _layout_pack_cases(model):
        sectors, sector_owner, rects, rect_owner = pack
        for x, y in zip(xs[:400], ys[:400]):
            a = classify_point(float(x), float(y), sectors, sector_owner, rects, rect_owner)
            b = _purepy.classify_point(float(x), float(y), sectors, sector_owner, rects, rect_owner)
            assert a == b


def test_batch_matches_pure_python_bitwise(model):
    rng = np.random.default_rng(12)
    xs = rng.uniform(-1.1, 1.1, 50_000)
    ys = rng.uniform(-1.1, 1.1, 50_000)
    for pack in _layout_pack_cases(model):
        sectors, sector_owner, rects, rect_owner = pack
        got = classify_batch(xs, ys, sectors, sector_owner, rects, rect_owner)
        want = _purepy.classify_batch(xs, ys, sectors, sector_owner, rects, rect_owner)
        assert np.array_equal(got, want)


def test_batch_matches_scalar_loop(model):
    rng = np.random.default_rng(13)
    xs = rng.uniform(-1.1, 1.1, 500)
    ys = rng.uniform(-1.1, 1.1, 500)
    sectors, sector_owner, rects, rect_owner = default_layout().packed()
    batch = classify_batch(xs, ys, sectors, sector_owner, rects, rect_owner)
    for i in range(len(xs)):
        assert batch[i] == classify_point(
            float(xs[i]), float(ys[i]), sectors, sector_owner, rects, rect_owner
        )


def test_boundary_points_agree_across_backends():
    # exact ring radii and slot boundaries are where float conventions bite
    sectors, sector_owner, rects, rect_owner = default_layout().packed()
    angles = np.array([k * np.pi / 6 for k in range(12)])
    pts_x, pts_y = [], []
    for r in (0.0, 0.3, 0.65, 1.0, 1.0 - 1.0 / np.sqrt(2.0)):
        pts_x.extend(r * np.cos(angles))
        pts_y.extend(r * np.sin(angles))
    xs = np.array(pts_x)
    ys = np.array(pts_y)
    got = classify_batch(xs, ys, sectors, sector_owner, rects, rect_owner)
    want = _purepy.classify_batch(xs, ys, sectors, sector_owner, rects, rect_owner)
    assert np.array_equal(got, want)


@pytest.mark.skipif(BACKEND != "compiled", reason="compiled backend unavailable")
def test_compiled_backend_is_loaded():
    assert "compiled" in available_backends()
