import pytest
from pydantic import ValidationError

from anc_sieve.config import RenderConfig
from anc_sieve.errors import CycleNotationError, PreconditionError
from anc_sieve.render import (
    CYCLE_STYLES,
    RenderSpec,
    cycle_kind,
    node_position,
    render_svg,
    write_svg,
)


@pytest.fixture
def two_connected_spec(two_connected_cycles) -> RenderSpec:
    return RenderSpec.from_text(9, 6, two_connected_cycles)


def test_node_positions():
    assert node_position(1, 2, 2) == (0.0, 1.0)
    assert node_position(2, 2, 2) == (0.0, -1.0)
    assert node_position(3, 2, 2) == (0.0, 0.45)
    assert node_position(4, 2, 2) == (0.0, -0.45)
    assert node_position(1, 2, 2, 0.12) == (0.0, 1.12)
    assert node_position(3, 2, 2, 0.12) == (0.0, 0.33)


def test_interior_runs_counter_clockwise():
    # exterior label 2 of 4 is at 3 o'clock, interior label n+2 of 4 at 9 o'clock
    assert node_position(2, 4, 4) == (1.0, 0.0)
    assert node_position(6, 4, 4) == (-0.45, 0.0)


@pytest.mark.parametrize(
    "cycle, kind",
    [((1, 2), "exterior"), ((3, 4), "interior"), ((1, 3), "connected"), ((4,), "interior")],
)
def test_cycle_kind(cycle, kind):
    assert cycle_kind(cycle, 2) == kind
    assert kind in CYCLE_STYLES


def test_svg_ids(two_connected_spec):
    svg = render_svg(two_connected_spec)
    assert svg.lstrip().startswith("<?xml")
    steps = [f"cycle-{k}-step-" for k in range(4)]
    assert svg.count('id="cycle-') == 15 + 14
    assert svg.count(f'id="{steps[0]}') == 7
    assert svg.count(f'id="{steps[1]}') == 2
    assert svg.count(f'id="{steps[2]}') == 5
    assert f'id="{steps[3]}' not in svg
    assert 'id="cycle-3-node-12"' in svg
    assert 'id="cycle-0-step-11"' in svg
    assert ">15<" in svg


def test_render_is_deterministic(two_connected_spec):
    assert render_svg(two_connected_spec) == render_svg(two_connected_spec)


def test_minimal_annulus(tmp_path):
    spec = RenderSpec.from_text(1, 1, "(1,2)")
    path = write_svg(spec, tmp_path / "out" / "minimal.svg")
    assert path.exists()
    text = path.read_text(encoding="utf-8")
    assert 'id="cycle-0-step-1"' in text
    assert 'id="cycle-0-step-2"' in text


def test_from_text_uses_render_config():
    config = RenderConfig(canvas_px=200, stroke_width=2.0, font_size=8.0)
    spec = RenderSpec.from_text(2, 2, "(1,3)(2,4)", config=config)
    assert (spec.canvas_px, spec.stroke_width, spec.font_size) == (200, 2.0, 8.0)
    assert str(spec.permutation) == "(1,3)(2,4)"


def test_non_anc_needs_force():
    with pytest.raises(PreconditionError, match="force"):
        RenderSpec.from_text(2, 2, "(1,2)(3,4)")
    spec = RenderSpec.from_text(2, 2, "(1,2)(3,4)", force=True)
    assert 'id="cycle-1-step-3"' in render_svg(spec)


def test_bad_notation():
    with pytest.raises(CycleNotationError):
        RenderSpec.from_text(2, 2, "(1,9)")
    with pytest.raises(CycleNotationError):
        RenderSpec.from_text(2, 2, "1,3")


def test_direct_construction_validates():
    with pytest.raises(ValidationError):
        RenderSpec(n=2, m=2, cycles=((1, 2), (3, 4)))
    with pytest.raises(ValidationError):
        RenderSpec(n=0, m=2, cycles=())
