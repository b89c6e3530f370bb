from enum import Enum

import numpy as np

from ccgeom.exceptions import OutsideModelDomain


class Space(Enum):
    """
        The three constant-curvature planes and the bilinear form each induces on its R^3 embedding:
        the unit sphere, the affine chart v3 = 1, and the upper sheet of the hyperboloid.

        >>> Space('H2').inner([1.0, 0.0, 2.0], [1.0, 0.0, 2.0])
        -3.0
        >>> Space.SPHERE.curvature
        1
    """

    SPHERE = 'S2'
    EUCLIDEAN = 'E2'
    HYPERBOLIC = 'H2'

    @property
    def curvature(self) -> int:
        return {Space.SPHERE: 1, Space.EUCLIDEAN: 0, Space.HYPERBOLIC: -1}[self]

    @property
    def orientation(self) -> int:
        """ Sign turning det[u, w, p] of a tangent pair (u, w) at p into the intrinsic orientation. """
        return -1 if self is Space.SPHERE else 1

    @property
    def gram(self) -> np.ndarray:
        if self is Space.SPHERE:
            return np.eye(3)

        if self is Space.HYPERBOLIC:
            return np.diag([1.0, 1.0, -1.0])

        return np.diag([1.0, 1.0, 0.0])

    def inner(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """ The ambient form along the last axis. For E2 only the two planar coordinates take part. """

        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        planar = x[..., 0] * y[..., 0] + x[..., 1] * y[..., 1]

        if self is Space.SPHERE:
            return planar + x[..., 2] * y[..., 2]

        if self is Space.HYPERBOLIC:
            return planar - x[..., 2] * y[..., 2]

        return planar

    def norm(self, x: np.ndarray) -> np.ndarray:
        """ Length of tangent (spacelike) vectors. """
        return np.sqrt(np.maximum(self.inner(x, x), 0.0))

    def project(self, v: np.ndarray) -> np.ndarray:
        """ Projects embedding vectors back onto the model quadric. """

        v = np.asarray(v, dtype=float)

        if self is Space.EUCLIDEAN:
            return v / v[..., 2:3]

        if self is Space.SPHERE:
            return v / np.linalg.norm(v, axis=-1, keepdims=True)

        q = self.inner(v, v)

        if np.any(q >= 0) or np.any(v[..., 2] <= 0):
            raise OutsideModelDomain('Vector is not on the future sheet of the hyperboloid.')

        return v / np.sqrt(-q)[..., None]

    def quadric_residual(self, v: np.ndarray) -> np.ndarray:
        """ How far v is off the quadric: |<v,v> - curvature| for S2/H2 and |v3 - 1| for E2. """

        v = np.asarray(v, dtype=float)

        if self is Space.EUCLIDEAN:
            return np.abs(v[..., 2] - 1.0)

        return np.abs(self.inner(v, v) - self.curvature)

    def tangent_part(self, at: np.ndarray, v: np.ndarray) -> np.ndarray:
        """ Component of v tangent to the quadric at the point at. """

        at = np.asarray(at, dtype=float)
        v = np.asarray(v, dtype=float)

        if self is Space.EUCLIDEAN:
            result = v - at
            result[..., 2] = 0.0
            return result

        return v - self.curvature * self.inner(v, at)[..., None] * at

    def rot90(self, at: np.ndarray, v: np.ndarray) -> np.ndarray:
        """ Rotates tangent vectors at the point at by +pi/2 in the positive sense. """

        at = np.asarray(at, dtype=float)
        v = np.asarray(v, dtype=float)

        if self is Space.EUCLIDEAN:
            result = np.zeros(np.broadcast(at, v).shape)
            result[..., 0] = -v[..., 1]
            result[..., 1] = v[..., 0]
            return result

        cross = np.cross(at, v)

        if self is Space.SPHERE:
            return -cross

        cross[..., 2] = -cross[..., 2]
        return cross
