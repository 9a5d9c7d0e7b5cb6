"""The simulated drawing surface: elements, constraints, and mutations.

CanvasState is an immutable value. Mutations return a new state with the
revision bumped by exactly one, which is what makes transcript replay and
snapshot-per-revision persistence trivial.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Sequence

from .errors import DuplicateElementId, EmptyElement, RejectedByConstraint
from .geometry import BBox, Polyline, clip_polyline_to_rect

DEFAULT_WIDTH = 1200
DEFAULT_HEIGHT = 900
DEFAULT_EDGE_MARGIN = 30.0
DEFAULT_ELEMENT_BUFFER = 40.0


class Author(str, Enum):
    AGENT = "agent"
    HUMAN = "human"


class AddPolicy(str, Enum):
    REJECT = "reject"
    CLIP_THEN_ACCEPT = "clip_then_accept"


@dataclass(frozen=True)
class ConstraintSet:
    """Geometric rules the agent must draw under.

    The minima (line length, circle diameter, text height) are derived from
    the physical pen scale by the runtime's instruction parameters and only
    bind tool dispatch, not direct library calls.
    """

    width: int = DEFAULT_WIDTH
    height: int = DEFAULT_HEIGHT
    edge_margin: float = DEFAULT_EDGE_MARGIN
    element_buffer: float = DEFAULT_ELEMENT_BUFFER
    min_line_len_px: float = 0.0
    min_circle_diam_px: float = 0.0
    min_text_height_px: float = 0.0

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas dimensions must be positive")
        if self.edge_margin < 0 or self.element_buffer < 0:
            raise ValueError("margins must be non-negative")

    @property
    def max_element_height(self) -> float:
        return float(math.floor(self.height / 3))

    @property
    def margin_rect(self) -> BBox:
        return BBox(
            self.edge_margin,
            self.edge_margin,
            self.width - self.edge_margin,
            self.height - self.edge_margin,
        )


@dataclass(frozen=True)
class Element:
    """One drawn element: the unit the agent perceives and spaces apart."""

    id: str
    author: Author
    strokes: tuple[Polyline, ...]
    label: str | None = None

    def __init__(
        self,
        id: str,
        author: Author | str,
        strokes: Iterable[Polyline],
        label: str | None = None,
    ):
        object.__setattr__(self, "id", id)
        object.__setattr__(self, "author", Author(author))
        object.__setattr__(self, "strokes", tuple(strokes))
        object.__setattr__(self, "label", label)

    def bbox(self) -> BBox:
        if not self.strokes:
            raise EmptyElement(f"element {self.id!r} has no strokes")
        return BBox.around(self.strokes)


@dataclass(frozen=True)
class Violation:
    kind: str  # edge_margin | element_buffer | height_cap
    detail: str
    measured: float
    limit: float


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.kind}: {v.detail}" for v in self.violations)


@dataclass(frozen=True)
class CanvasState:
    """Immutable canvas snapshot; mutations produce the next revision."""

    constraints: ConstraintSet = field(default_factory=ConstraintSet)
    elements: tuple[Element, ...] = ()
    revision: int = 0

    def element_by_id(self, element_id: str) -> Element | None:
        for el in self.elements:
            if el.id == element_id:
                return el
        return None

    def next_element_id(self) -> str:
        return f"e{len(self.elements) + 1}"


def min_element_distance(a: Element, b: Element) -> float:
    """Minimum bbox-to-bbox distance; 0 iff the boxes intersect or touch."""
    return a.bbox().distance_to(b.bbox())


def validate_placement(
    canvas: CanvasState,
    candidate: Element,
    exempt: str | None = None,
) -> ValidationReport:
    """Check a candidate element against the canvas constraints.

    Pure query: reports edge-margin, element-buffer and height-cap
    violations without mutating anything. `exempt` skips the buffer check
    against one element id, for deliberate additions to an existing figure.
    """
    cons = canvas.constraints
    box = candidate.bbox()
    violations: list[Violation] = []

    margin = cons.margin_rect
    if not margin.contains(box):
        violations.append(
            Violation(
                kind="edge_margin",
                detail=(
                    f"bbox [{box.min_x:.1f},{box.min_y:.1f},"
                    f"{box.max_x:.1f},{box.max_y:.1f}] leaves the "
                    f"{cons.edge_margin:g} px margin rectangle"
                ),
                measured=min(
                    box.min_x - margin.min_x,
                    box.min_y - margin.min_y,
                    margin.max_x - box.max_x,
                    margin.max_y - box.max_y,
                ),
                limit=0.0,
            )
        )

    for other in canvas.elements:
        if other.id == candidate.id or other.id == exempt:
            continue
        gap = box.distance_to(other.bbox())
        if gap < cons.element_buffer:
            violations.append(
                Violation(
                    kind="element_buffer",
                    detail=(
                        f"only {gap:.1f} px from element {other.id!r} "
                        f"(buffer {cons.element_buffer:g} px)"
                    ),
                    measured=gap,
                    limit=cons.element_buffer,
                )
            )

    if box.height > cons.max_element_height:
        violations.append(
            Violation(
                kind="height_cap",
                detail=(
                    f"element height {box.height:.1f} px exceeds cap "
                    f"{cons.max_element_height:g} px"
                ),
                measured=box.height,
                limit=cons.max_element_height,
            )
        )

    return ValidationReport(ok=not violations, violations=tuple(violations))


def add_element(
    canvas: CanvasState,
    element: Element,
    policy: AddPolicy | str = AddPolicy.CLIP_THEN_ACCEPT,
) -> CanvasState:
    """Return a new canvas with the element added (revision +1).

    Under clip_then_accept, strokes are hard-clipped to the margin
    rectangle; under reject, any placement violation raises
    RejectedByConstraint and the canvas is untouched.
    """
    policy = AddPolicy(policy)
    if not element.strokes:
        raise EmptyElement(f"element {element.id!r} has no strokes")
    if canvas.element_by_id(element.id) is not None:
        raise DuplicateElementId(element.id)

    if policy is AddPolicy.REJECT:
        report = validate_placement(canvas, element)
        if not report.ok:
            raise RejectedByConstraint(report)
        accepted = element
    else:
        rect = canvas.constraints.margin_rect
        clipped: list[Polyline] = []
        for stroke in element.strokes:
            clipped.extend(clip_polyline_to_rect(stroke, rect))
        if not clipped:
            raise EmptyElement(
                f"element {element.id!r} clipped away entirely"
            )
        accepted = Element(element.id, element.author, clipped, element.label)

    return replace(
        canvas,
        elements=canvas.elements + (accepted,),
        revision=canvas.revision + 1,
    )


# -- JSON persistence ---------------------------------------------------------

def canvas_to_dict(canvas: CanvasState) -> dict:
    return {
        "constraints": {
            "width": canvas.constraints.width,
            "height": canvas.constraints.height,
            "edge_margin": canvas.constraints.edge_margin,
            "element_buffer": canvas.constraints.element_buffer,
            "min_line_len_px": canvas.constraints.min_line_len_px,
            "min_circle_diam_px": canvas.constraints.min_circle_diam_px,
            "min_text_height_px": canvas.constraints.min_text_height_px,
        },
        "elements": [
            {
                "id": el.id,
                "author": el.author.value,
                "label": el.label,
                "strokes": [
                    [[x, y] for x, y in stroke.points] for stroke in el.strokes
                ],
            }
            for el in canvas.elements
        ],
        "revision": canvas.revision,
    }


def canvas_from_dict(doc: dict) -> CanvasState:
    cons = ConstraintSet(**doc.get("constraints", {}))
    elements = tuple(
        Element(
            id=e["id"],
            author=e["author"],
            strokes=[Polyline(s) for s in e["strokes"]],
            label=e.get("label"),
        )
        for e in doc.get("elements", [])
    )
    return CanvasState(
        constraints=cons, elements=elements, revision=int(doc.get("revision", 0))
    )


def dump_canvas(canvas: CanvasState) -> str:
    return json.dumps(canvas_to_dict(canvas), indent=2)


def load_canvas(text: str) -> CanvasState:
    return canvas_from_dict(json.loads(text))


def strokes_from_lists(strokes: Sequence[Sequence[Sequence[float]]]) -> list[Polyline]:
    """Parse [[x,y], ...] stroke lists (wire format) into Polylines."""
    return [Polyline(s) for s in strokes]
