"""Annotated trajectory images as SVG."""

from __future__ import annotations

from dataclasses import dataclass

from quadland.assessment.improvement import AnnotationPoint
from quadland.sim.config import SimConfig
from quadland.sim.episode import Trajectory

DEFAULT_CIRCLE_RADIUS = 30.0


@dataclass(frozen=True)
class AnnotatedImage:
    svg: str
    annotation: AnnotationPoint
    width: float
    height: float


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_trajectory_image(
    trajectory: Trajectory,
    annotation: AnnotationPoint,
    config: SimConfig,
    circle_radius: float = DEFAULT_CIRCLE_RADIUS,
) -> AnnotatedImage:
    """Deterministic SVG: frame, pad, start marker, flight path, highlight circle.

    World y points up (pad on the floor), SVG y points down, so vertical
    coordinates flip across the window height.
    """
    if not trajectory.samples:
        raise ValueError("trajectory has no samples")
    w, h = config.window_width, config.window_height

    def sy(y: float) -> float:
        return h - y

    points = " ".join(f"{_fmt(s.x)},{_fmt(sy(s.y))}" for s in trajectory.samples)
    start = trajectory.samples[0]
    pad_w = config.pad_x_max - config.pad_x_min

    svg = (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(w)} {_fmt(h)}" '
        f'width="{_fmt(w)}" height="{_fmt(h)}">\n'
        f'  <rect x="0" y="0" width="{_fmt(w)}" height="{_fmt(h)}" '
        f'fill="white" stroke="black" stroke-width="2"/>\n'
        f'  <rect x="{_fmt(config.pad_x_min)}" y="{_fmt(h - 8)}" '
        f'width="{_fmt(pad_w)}" height="8" fill="black"/>\n'
        f'  <polyline points="{points}" fill="none" stroke="#1f77b4" stroke-width="2"/>\n'
        f'  <rect x="{_fmt(start.x - 6)}" y="{_fmt(sy(start.y) - 6)}" width="12" height="12" '
        f'fill="#2ca02c" stroke="none"/>\n'
        f'  <circle cx="{_fmt(annotation.x)}" cy="{_fmt(sy(annotation.y))}" '
        f'r="{_fmt(circle_radius)}" fill="none" stroke="red" stroke-width="3"/>\n'
        f"</svg>\n"
    )
    return AnnotatedImage(svg=svg, annotation=annotation, width=w, height=h)
