import logging
from pathlib import Path
from typing import Iterable, List, Optional

import numpy as np
import svgwrite

from ccgeom.config import get_settings
from ccgeom.cycles import Cycle, CycleArc, sample_vectors
from ccgeom.decorators import validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import IsEnum
from ccgeom.exceptions import AmbiguousNearTolerance, GeometryException
from ccgeom.harness.scene import Scene, scene_intersection
from ccgeom.regions import ConvexRegion, boundary_chain, finite_vertices, is_compact
from ccgeom.space_kernel import ModelKind, Space, to_model_coordinates
from ccgeom.symmetry import SymmetryReport, classify

logger = logging.getLogger(__name__)

CANVAS = 640
ARC_SAMPLES = 128
BODY_COLOURS = ('#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#8c564b')
SOUTHERN_MARGIN = 1e-3


class _Canvas:
    """ Maps model coordinates in [-extent, extent]^2 to SVG pixels with y pointing up. """

    def __init__(self, drawing: svgwrite.Drawing, extent: float) -> None:
        self.drawing = drawing
        self.scale = CANVAS / (2.0 * extent)

    def pixels(self, u: np.ndarray) -> List[tuple]:
        u = np.atleast_2d(u)
        return [(CANVAS / 2.0 + self.scale * x, CANVAS / 2.0 - self.scale * y) for x, y in u]

    def polyline(self, u: np.ndarray, closed: bool, **style) -> None:
        points = self.pixels(u)
        shape = self.drawing.polygon(points, **style) if closed else self.drawing.polyline(points, **style)
        self.drawing.add(shape)


def _chain_coordinates(region: ConvexRegion, model: ModelKind) -> List[tuple]:
    """ Model coordinates of every boundary chain, with a flag telling whether it is closed. """

    clip = get_settings().default_clip
    result = []

    for chain in boundary_chain(region):
        vectors = np.concatenate([sample_vectors(arc, ARC_SAMPLES, clip) for arc in chain.arcs])
        result.append((to_model_coordinates(region.space, model, vectors), chain.closed))

    return result


def _visible_runs(space: Space, model: ModelKind, vectors: np.ndarray) -> Iterable[np.ndarray]:
    """ The pieces of a sampled curve inside the model domain, in model coordinates. """

    if space is Space.SPHERE and model is ModelKind.COLLINEAR:
        visible = vectors[:, 2] < -SOUTHERN_MARGIN
    elif space is Space.SPHERE:
        visible = vectors[:, 2] < 1.0 - SOUTHERN_MARGIN
    else:
        visible = np.ones(len(vectors), dtype=bool)

    edges = np.flatnonzero(np.diff(np.concatenate([[0], visible.astype(int), [0]])))

    for start, end in zip(edges[::2], edges[1::2]):
        if end - start > 1:
            yield to_model_coordinates(space, model, vectors[start:end])


def _axis_vectors(axis: Cycle) -> np.ndarray:
    arc = CycleArc.full(axis)
    return sample_vectors(arc, 4 * ARC_SAMPLES, get_settings().default_clip)


def _extent(space: Space, model: ModelKind, chains: Iterable[tuple]) -> float:
    if space is Space.HYPERBOLIC:
        return 1.05

    reach = max((float(np.max(np.abs(u))) for u, _ in chains), default=1.0)
    return max(1.0, 1.15 * reach)


def _symmetry_of(region: ConvexRegion) -> Optional[SymmetryReport]:
    try:
        return classify(region)
    except AmbiguousNearTolerance as ex:
        logger.info(f'Not drawing symmetries: {ex}')
        return ex.report
    except GeometryException as ex:
        logger.info(f'Not drawing symmetries: {type(ex).__name__}: {ex}')
        return None


@validate(Parameter(name='model', validators=[IsEnum(ModelKind, to_upper_case=False)]))
def render(scene: Scene, model: ModelKind, path: str | Path) -> Path:
    """
        Draws the model image of a scene as SVG: the boundary of the model disk (H2 and the conformal picture
        of S2), each placed body, the intersection, its non-smooth vertices and, when the intersection is
        compact, its symmetry axes and centre.
        Raises OutsideModelDomain when a region of S2 leaves the part of the sphere the model shows.
    """

    path = Path(path)
    space = scene.space
    bodies = [_chain_coordinates(region, model) for region in scene.placed_regions]
    result = scene_intersection(scene) if scene.bodies else None
    meet = _chain_coordinates(result.region, model) if result is not None and result.has_interior else []
    extent = _extent(space, model, [chain for chains in bodies for chain in chains] + meet)

    drawing = svgwrite.Drawing(str(path), size=(CANVAS, CANVAS), profile='full')
    drawing.add(drawing.rect(insert=(0, 0), size=(CANVAS, CANVAS), fill='white'))
    canvas = _Canvas(drawing, extent)

    if space is Space.HYPERBOLIC:
        drawing.add(drawing.circle(center=(CANVAS / 2.0, CANVAS / 2.0), r=canvas.scale, fill='none', stroke='black'))

    for u, closed in meet:
        canvas.polyline(u, closed, fill='#ffd54f' if closed else 'none', fill_opacity=0.6, stroke='none')

    for index, chains in enumerate(bodies):
        colour = BODY_COLOURS[index % len(BODY_COLOURS)]

        for u, closed in chains:
            canvas.polyline(u, closed, fill='none', stroke=colour, stroke_width=1.5)

    if meet:
        for vertex in finite_vertices(result.region):
            (x, y), = canvas.pixels(to_model_coordinates(space, model, vertex.v))
            drawing.add(drawing.circle(center=(x, y), r=3, fill='black'))

    report = _symmetry_of(result.region) if meet and is_compact(result.region) else None

    if report is not None:
        for axis in report.axes:
            for u in _visible_runs(space, model, _axis_vectors(axis)):
                canvas.polyline(u, False, fill='none', stroke='#555555', stroke_dasharray='6,4')

        if report.centre is not None:
            (x, y), = canvas.pixels(to_model_coordinates(space, model, report.centre.v))
            drawing.add(drawing.circle(center=(x, y), r=4, fill='none', stroke='black', stroke_width=1.5))

    drawing.save()
    logger.debug(f'Wrote {path}')
    return path
