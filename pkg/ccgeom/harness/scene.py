import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from ccgeom.cycles import Cycle, CycleKind, make_cycle
from ccgeom.decorators import frozen_dataclass, Deserializable
from ccgeom.exceptions import GeometryException, ParseError, SpaceMismatch
from ccgeom.regions import ConvexRegion, HalfDomain, IntersectionResult, IntersectionStatus, Side, boundary_chain, \
    intersect_regions, is_compact, moved, region_from_halves
from ccgeom.space_kernel import CongruenceKind, CongruenceSpec, IdealPoint, Isometry, ModelKind, Point, Space, \
    congruence_spec_of, direction_at, from_model_coordinates, isometry_from

logger = logging.getLogger(__name__)

PLACEMENT_MATCH = 1e-9


class _Problem(Exception):
    """ A schema violation and the key of the document where it was found. """

    def __init__(self, msg: str, key: str) -> None:
        super().__init__(msg)
        self.key = key


@frozen_dataclass
class Body:
    """ An unplaced region and the congruence placing it. A region that was moved already is unfolded. """

    region: ConvexRegion
    placement: Optional[Isometry] = None

    def __post_init__(self) -> None:
        placement = self.placement or Isometry.identity(self.region.space)

        if not self.region.placement.is_identity(0.0):
            placement = placement.compose(self.region.placement)
            object.__setattr__(self, 'region', self.region.copy_with(placement=Isometry.identity(self.region.space)))

        object.__setattr__(self, 'placement', placement)

    @property
    def placed(self) -> ConvexRegion:
        return moved(self.region, self.placement)


@frozen_dataclass
class Scene(Deserializable):
    """
        Regions of one space with their placements, e.g. the pair (phi K, psi L) of a construction.

        >>> from ccgeom.regions import disk
        >>> scene = Scene(space=Space.EUCLIDEAN, bodies=[Body(region=disk(Point.plane(0.0, 0.0), 1.0))])
        >>> serialize_scene(Scene.from_json(scene.to_json())) == serialize_scene(scene)
        True
    """

    space: Space
    bodies: Tuple[Body, ...]
    name: str = ''
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, 'bodies', tuple(self.bodies))

        for body in self.bodies:
            if body.region.space is not self.space:
                raise SpaceMismatch(f'A region of {body.region.space.value} in a scene of {self.space.value}')

    @property
    def placed_regions(self) -> Tuple[ConvexRegion, ...]:
        return tuple(body.placed for body in self.bodies)

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'Scene':
        try:
            return _scene(data)
        except _Problem as ex:
            raise ParseError(str(ex), line=1, column=1)

    def to_json(self) -> Dict[str, Any]:
        return {
            'space': self.space.value,
            'seed': self.seed,
            'name': self.name,
            'bodies': [_body_document(body) for body in self.bodies],
        }


def _require(data: Dict[str, Any], key: str) -> Any:
    if not isinstance(data, dict):
        raise _Problem(f'Expected an object holding "{key}"', key)

    if key not in data:
        raise _Problem(f'Missing key "{key}"', key)

    return data[key]


def _vector(value: Any, key: str, sizes: Sequence[int]) -> np.ndarray:
    try:
        v = np.asarray(value, dtype=float)
    except (TypeError, ValueError):
        raise _Problem(f'"{key}" must be a list of numbers', key)

    if v.ndim != 1 or len(v) not in sizes or not np.all(np.isfinite(v)):
        raise _Problem(f'"{key}" must hold {" or ".join(str(s) for s in sizes)} finite numbers', key)

    return v


def _number(data: Dict[str, Any], key: str, default: Optional[float] = None) -> float:
    value = data.get(key, default) if default is not None else _require(data, key)

    if isinstance(value, bool) or not isinstance(value, (int, float)) or not np.isfinite(value):
        raise _Problem(f'"{key}" must be a finite number', key)

    return float(value)


def _point(space: Space, value: Any, key: str) -> Point:
    """ An embedding 3-vector, or a 2-vector of collinear model coordinates (plane coordinates in E2). """

    v = _vector(value, key, (2, 3))

    try:
        if len(v) == 2:
            v = from_model_coordinates(space, ModelKind.COLLINEAR, v)

        return Point(v=v, space=space)
    except GeometryException as ex:
        raise _Problem(f'"{key}": {ex}', key)


def _ideal(value: Any, key: str) -> IdealPoint:
    """ A direction of the plane or an angle. """

    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return IdealPoint.at_angle(float(value))

    u = _vector(value, key, (2,))
    length = float(np.linalg.norm(u))

    if length == 0.0:
        raise _Problem(f'"{key}" must be a nonzero direction', key)

    return IdealPoint(u=u / length)


def _cycle(space: Space, data: Dict[str, Any]) -> Cycle:
    if isinstance(data, dict) and 'c' in data and 'k' in data:
        try:
            cycle = Cycle.from_level_set(space, _vector(data['c'], 'c', (3,)), _number(data, 'k'))
        except GeometryException as ex:
            raise _Problem(f'Invalid level set: {ex}', 'c')

        if 'kind' in data and data['kind'] != cycle.kind.value:
            raise _Problem(f'Level set is a {cycle.kind.value}, not a {data["kind"]}', 'kind')

        return cycle

    try:
        kind = CycleKind(_require(data, 'kind'))
    except ValueError:
        raise _Problem(f'Unknown cycle kind {data["kind"]!r}', 'kind')

    params: Dict[str, Any] = {}

    if kind is CycleKind.CIRCLE:
        params = {'centre': _point(space, _require(data, 'centre'), 'centre'), 'radius': _number(data, 'radius')}
    elif kind is CycleKind.PARACYCLE:
        params = {'ideal': _ideal(_require(data, 'ideal'), 'ideal')}

        if 'through' in data:
            params['through'] = _point(space, data['through'], 'through')
        else:
            params['level'] = _number(data, 'level')
    elif kind is CycleKind.HYPERCYCLE:
        params = {'base': _cycle(space, _require(data, 'base')), 'distance': _number(data, 'distance')}
    elif 'point' in data:
        point = _point(space, data['point'], 'point')
        params = {'point': point}

        if 'direction' in data:
            params['direction'] = _vector(data['direction'], 'direction', (3,))
        else:
            params['direction'] = direction_at(point, _number(data, 'angle'))
    else:
        params = {'a': _point(space, _require(data, 'a'), 'a'), 'b': _point(space, _require(data, 'b'), 'b')}

    try:
        return make_cycle(space, kind, params)
    except GeometryException as ex:
        raise _Problem(f'Invalid {kind.value}: {ex}', 'kind')


def _placement(space: Space, data: Optional[Dict[str, Any]]) -> Isometry:
    if data is None:
        return Isometry.identity(space)

    kind = _require(data, 'type')

    try:
        if kind == 'identity':
            return Isometry.identity(space)

        if kind == 'matrix':
            return Isometry.of_matrix(space, _vector(np.ravel(_require(data, 'matrix')), 'matrix', (9,)).reshape(3, 3))

        try:
            congruence = CongruenceKind(kind)
        except ValueError:
            raise _Problem(f'Unknown placement type {kind!r}', 'type')

        spec = CongruenceSpec(
            kind=congruence,
            centre=_point(space, data['centre'], 'centre') if 'centre' in data else None,
            angle=_number(data, 'angle', 0.0),
            ideal=_ideal(data['ideal'], 'ideal') if 'ideal' in data else None,
            shift=_number(data, 'shift', 0.0),
            start=_point(space, data['start'], 'start') if 'start' in data else None,
            towards=_point(space, data['towards'], 'towards') if 'towards' in data else None,
            length=_number(data, 'length', 0.0),
        )
        return isometry_from(space, spec)
    except GeometryException as ex:
        raise _Problem(f'Invalid placement: {ex}', 'placement')


def _body(space: Space, data: Dict[str, Any]) -> Body:
    halves = _require(data, 'halves')

    if not isinstance(halves, list) or not halves:
        raise _Problem('"halves" must be a nonempty list', 'halves')

    converted = []

    for half in halves:
        if not isinstance(half, dict):
            raise _Problem('Every entry of "halves" must be an object', 'halves')

        try:
            side = Side(half.get('side', Side.CONVEX.value))
        except ValueError:
            raise _Problem(f'Unknown side {half.get("side")!r}', 'side')

        converted.append((_cycle(space, _require(half, 'cycle')), side))

    try:
        region = region_from_halves(space, [HalfDomain(cycle=cycle, side=side) for cycle, side in converted])
    except GeometryException as ex:
        raise _Problem(f'Invalid region: {type(ex).__name__}: {ex}', 'halves')

    return Body(region=region, placement=_placement(space, data.get('placement')))


def _scene(data: Dict[str, Any]) -> Scene:
    try:
        space = Space(_require(data, 'space'))
    except ValueError:
        raise _Problem(f'Unknown space {data["space"]!r}, expected S2, E2 or H2', 'space')

    seed = data.get('seed', 0)

    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < 2 ** 64:
        raise _Problem('"seed" must be an unsigned 64-bit integer', 'seed')

    bodies = _require(data, 'bodies')

    if not isinstance(bodies, list):
        raise _Problem('"bodies" must be a list', 'bodies')

    name = data.get('name', '')
    return Scene(space=space, bodies=tuple(_body(space, body) for body in bodies), name=str(name), seed=seed)


def _placement_document(iso: Isometry) -> Dict[str, Any]:
    """ A placement in the parameters of its congruence type; only glide reflections stay a matrix. """

    spec = congruence_spec_of(iso)

    if spec is not None:
        rebuilt = isometry_from(iso.space, spec)
        scale = max(1.0, float(np.max(np.abs(iso.m))))

        if np.max(np.abs(rebuilt.m - iso.m)) > PLACEMENT_MATCH * scale:
            logger.warning(f'The {spec.kind.value} parameters do not rebuild the placement, writing its matrix')
            spec = None

    if spec is None:
        return {'type': 'matrix', 'matrix': iso.m.tolist()}

    document: Dict[str, Any] = {'type': spec.kind.value}

    if spec.kind in (CongruenceKind.ROTATION, CongruenceKind.POINT_REFLECTION):
        document['centre'] = spec.centre.v.tolist()

    if spec.kind is CongruenceKind.ROTATION:
        document['angle'] = spec.angle
    elif spec.kind is CongruenceKind.IDEAL_ROTATION:
        document.update(ideal=spec.ideal.u.tolist(), shift=spec.shift)
    elif spec.kind in (CongruenceKind.TRANSLATION, CongruenceKind.REFLECTION):
        document.update(start=spec.start.v.tolist(), towards=spec.towards.v.tolist())

    if spec.kind is CongruenceKind.TRANSLATION:
        document['length'] = spec.length

    return document


def _body_document(body: Body) -> Dict[str, Any]:
    halves = [{'cycle': {'kind': half.cycle.kind.value, 'c': half.cycle.c.tolist(), 'k': half.cycle.k},
               'side': half.side.value} for half in body.region.halves]
    return {'halves': halves, 'placement': _placement_document(body.placement)}


def _locate(text: str, key: str) -> Tuple[int, int]:
    """ Line and column of the first occurrence of a key in the document. """

    index = text.find(f'"{key}"')

    if index < 0:
        return 1, 1

    line = text.count('\n', 0, index) + 1
    column = index - (text.rfind('\n', 0, index) + 1) + 1
    return line, column


def loads_scene(text: str) -> Scene:
    """
        Reads a scene document.

        >>> loads_scene('{"space": "E2", "bodies": [}')
        Traceback (most recent call last):
        ...
        ccgeom.exceptions.ParseError: Expecting value (line 1, column 28)
    """

    try:
        data = json.loads(text)
    except json.JSONDecodeError as ex:
        raise ParseError(ex.msg, line=ex.lineno, column=ex.colno)

    try:
        scene = _scene(data)
    except _Problem as ex:
        line, column = _locate(text, ex.key)
        raise ParseError(str(ex), line=line, column=column)

    logger.debug(f'Read a {scene.space.value} scene with {len(scene.bodies)} bodies')
    return scene


def parse_scene(path: str | Path) -> Scene:
    data = Path(path).read_bytes()

    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as ex:
        line = data.count(b'\n', 0, ex.start) + 1
        column = ex.start - (data.rfind(b'\n', 0, ex.start) + 1) + 1
        raise ParseError(f'Invalid UTF-8: {ex.reason}', line=line, column=column)

    return loads_scene(text)


def serialize_scene(scene: Scene) -> str:
    """ The document of a scene: cycles as level sets, placements by their congruence type. """
    return json.dumps(scene.to_json(), indent=2)


def write_scene(scene: Scene, path: str | Path) -> None:
    Path(path).write_text(serialize_scene(scene), encoding='utf-8')


def scene_intersection(scene: Scene) -> IntersectionResult:
    """ The intersection of all placed bodies, classified as for two regions. """

    regions = scene.placed_regions

    if not regions:
        raise ParseError('A scene without bodies has no intersection', line=1, column=1)

    current = regions[0]

    if len(regions) == 1:
        status = IntersectionStatus.COMPACT_LENS if is_compact(current) else IntersectionStatus.UNBOUNDED
        chain = boundary_chain(current)[0] if status is IntersectionStatus.COMPACT_LENS else None
        return IntersectionResult(status=status, region=current, chain=chain)

    result = intersect_regions(current, regions[1])

    for region in regions[2:]:
        if not result.has_interior:
            break

        result = intersect_regions(result.region, region)

    return result
