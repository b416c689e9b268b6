"""SVG diagrams of annular permutations.

Exterior labels 1..n run clockwise from 12 o'clock on the outer circle,
interior labels n+1..n+m run counter-clockwise on the inner circle, and every
mapping step x -> pi(x) of a nontrivial cycle is drawn as one curved arrow.

Output is deterministic: the SVG hash salt is fixed, text is written as text
and the date/creator metadata is dropped, so identical inputs give identical
bytes.

Example:
    ```python
    from anc_sieve.render import RenderSpec, write_svg

    spec = RenderSpec.from_text(9, 6, "(1,2,3,6,15,10,11)(4,5)(7,8,9,13,14)(12)")
    write_svg(spec, "annulus.svg")
    ```
"""
import io
import math
import pathlib
from typing import Optional, Union

import matplotlib as mpl
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure
from matplotlib.patches import Circle, FancyArrowPatch
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .annulus import AnnularPermutation, is_connected_anc, parse_cycle_notation
from .config import RenderConfig, get_config
from .errors import PreconditionError
from .logger import AncLogger

EXTERIOR_RADIUS = 1.0
INTERIOR_RADIUS = 0.45
LABEL_OFFSET = 0.12
NODE_RADIUS = 0.025
AXIS_LIMIT = 1.3

# Cycle kind -> (color, line width multiplier)
CYCLE_STYLES = {
    "connected": ("#d62728", 1.3),  # red
    "exterior": ("#1f77b4", 1.0),   # blue
    "interior": ("#2ca02c", 1.0),   # green
}

# Arc curvature keyed by where a step's endpoints lie; positive bends right of travel
CURVATURE = {
    "connected": -0.15,
    "exterior": 0.25,
    "interior": 0.25,
}

SVG_RC = {
    "svg.hashsalt": "anc_sieve",
    "svg.fonttype": "none",
}
SVG_METADATA = {"Date": None, "Creator": None}


class RenderSpec(BaseModel):
    """What to draw and how.

    Attributes:
        n: exterior circle size
        m: interior circle size
        cycles: cycles of the permutation; omitted labels are fixed points
        canvas_px: width and height of the square canvas
        stroke_width: arrow line width in points
        font_size: label font size in points
        force: draw even if the permutation is not a connected annular
            noncrossing permutation
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    m: int = Field(ge=1)
    cycles: tuple[tuple[int, ...], ...]
    canvas_px: int = Field(default=480, ge=64)
    stroke_width: float = Field(default=1.5, gt=0)
    font_size: float = Field(default=10.0, gt=0)
    force: bool = False

    @model_validator(mode="after")
    def check_permutation(self) -> "RenderSpec":
        """The cycles must form a connected annular noncrossing permutation unless forced."""
        permutation = AnnularPermutation.from_cycles(self.n, self.m, self.cycles)
        if not self.force and not is_connected_anc(permutation):
            raise ValueError(
                f"{permutation} is not a connected ({self.n},{self.m})-annular "
                "noncrossing permutation; set force to draw it anyway"
            )
        return self

    @classmethod
    def from_text(
        cls,
        n: int,
        m: int,
        text: str,
        force: bool = False,
        config: Optional[RenderConfig] = None,
    ) -> "RenderSpec":
        """Builds a spec from cycle notation, taking drawing options from config.

        Raises:
            CycleNotationError: if text is not cycle notation or uses bad labels
            PreconditionError: if the permutation fails the noncrossing
                criterion and force is not set
        """
        config = config or get_config().render
        cycles = tuple(parse_cycle_notation(text))
        # label errors surface as CycleNotationError rather than ValidationError
        AnnularPermutation.from_cycles(n, m, cycles)
        try:
            return cls(
                n=n, m=m, cycles=cycles,
                canvas_px=config.canvas_px,
                stroke_width=config.stroke_width,
                font_size=config.font_size,
                force=force,
            )
        except ValidationError as e:
            message = e.errors()[0]["msg"].removeprefix("Value error, ")
            raise PreconditionError(message) from e

    @property
    def permutation(self) -> AnnularPermutation:
        return AnnularPermutation.from_cycles(self.n, self.m, self.cycles)


def node_position(label: int, n: int, m: int, radius_offset: float = 0.0) -> tuple[float, float]:
    """Canvas position of a label.

    Exterior label i sits at 90 - 360(i-1)/n degrees; interior label n+i at
    90 + 360(i-1)/m degrees.
    """
    if label <= n:
        angle = 90.0 - 360.0 * (label - 1) / n
        radius = EXTERIOR_RADIUS + radius_offset
    else:
        angle = 90.0 + 360.0 * (label - n - 1) / m
        radius = INTERIOR_RADIUS - radius_offset
    theta = math.radians(angle)
    return round(radius * math.cos(theta), 9), round(radius * math.sin(theta), 9)


def cycle_kind(cycle: tuple[int, ...], n: int) -> str:
    """'connected', 'exterior' or 'interior'."""
    exterior = [x <= n for x in cycle]
    if all(exterior):
        return "exterior"
    if not any(exterior):
        return "interior"
    return "connected"


def draw_annulus(spec: RenderSpec) -> Figure:
    """Draws the diagram on a new matplotlib Figure.

    Each cycle's markers and arrows carry SVG ids ``cycle-<k>-node-<x>`` and
    ``cycle-<k>-step-<x>``, k counting the canonical cycles from 0.
    """
    inches = spec.canvas_px / 100
    fig = Figure(figsize=(inches, inches), dpi=100)
    FigureCanvasSVG(fig)
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_xlim(-AXIS_LIMIT, AXIS_LIMIT)
    ax.set_ylim(-AXIS_LIMIT, AXIS_LIMIT)
    ax.set_aspect("equal")
    ax.axis("off")

    for radius in (EXTERIOR_RADIUS, INTERIOR_RADIUS):
        ax.add_patch(Circle((0, 0), radius, fill=False, edgecolor="#808080", linewidth=1.0))

    n, m = spec.n, spec.m
    permutation = spec.permutation
    for k, cycle in enumerate(permutation.cycles):
        kind = cycle_kind(cycle, n)
        color, width_factor = CYCLE_STYLES[kind]
        for x in cycle:
            marker = Circle(node_position(x, n, m), NODE_RADIUS, color="black", zorder=3)
            marker.set_gid(f"cycle-{k}-node-{x}")
            ax.add_patch(marker)
            ax.text(
                *node_position(x, n, m, LABEL_OFFSET), str(x),
                ha="center", va="center", fontsize=spec.font_size,
            )
        if len(cycle) == 1:
            continue
        for x in cycle:
            y = permutation(x)
            step_kind = cycle_kind((x, y), n)
            arrow = FancyArrowPatch(
                posA=node_position(x, n, m),
                posB=node_position(y, n, m),
                arrowstyle="-|>",
                connectionstyle=f"arc3,rad={CURVATURE[step_kind]}",
                mutation_scale=10,
                shrinkA=4,
                shrinkB=4,
                linewidth=spec.stroke_width * width_factor,
                color=color,
                zorder=2,
            )
            arrow.set_gid(f"cycle-{k}-step-{x}")
            ax.add_patch(arrow)
    return fig


def render_svg(spec: RenderSpec) -> str:
    """The SVG document for spec."""
    fig = draw_annulus(spec)
    buffer = io.StringIO()
    with mpl.rc_context(SVG_RC):
        fig.savefig(buffer, format="svg", metadata=SVG_METADATA)
    AncLogger.debug(
        f"Rendered {spec.permutation} with {len(spec.permutation.cycles)} cycles"
    )
    return buffer.getvalue()


def write_svg(spec: RenderSpec, path: Union[str, pathlib.Path]) -> pathlib.Path:
    """Writes the SVG for spec to path, creating parent directories."""
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_svg(spec), encoding="utf-8")
    AncLogger.info(f"Wrote {path}")
    return path
