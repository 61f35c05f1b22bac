"""Exact rational linear algebra on direction vectors.

Points of the sphere are represented by primitive integer direction
vectors: every predicate used downstream is the sign of a determinant,
which is invariant under positive scaling, so unit vectors are never
needed and all arithmetic stays in exact integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from .errors import DegenerateAnchor, NotAffine, NotGeneralPosition

# Exact rational scalar used for planar coordinates.  The stdlib Fraction
# already maintains the normalized-numerator/positive-denominator invariants.
Rational = Fraction

Vec3 = tuple[int, int, int]


def _primitive(x: int, y: int, z: int) -> Vec3:
    g = math.gcd(math.gcd(abs(x), abs(y)), abs(z))
    if g == 0:
        raise ValueError("zero vector has no direction")
    return (x // g, y // g, z // g)


@dataclass(frozen=True, slots=True)
class SpherePoint:
    """A point of S^2 up to positive scaling: a primitive integer direction."""

    x: int
    y: int
    z: int

    def __post_init__(self):
        x, y, z = _primitive(self.x, self.y, self.z)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @property
    def vec(self) -> Vec3:
        return (self.x, self.y, self.z)

    def __neg__(self) -> "SpherePoint":
        return SpherePoint(-self.x, -self.y, -self.z)

    def __repr__(self):
        return f"SpherePoint({self.x}, {self.y}, {self.z})"


def sphere_point_from_rationals(coords: Sequence[Rational | int]) -> SpherePoint:
    """Clear denominators of a rational 3-vector and reduce to primitive form."""
    fr = [Fraction(c) for c in coords]
    if len(fr) != 3:
        raise ValueError("expected 3 coordinates")
    scale = math.lcm(*(f.denominator for f in fr))
    return SpherePoint(*(int(f * scale) for f in fr))


def det3(p: Vec3, q: Vec3, r: Vec3) -> int:
    """Determinant of the 3x3 integer matrix with rows p, q, r."""
    return (
        p[0] * (q[1] * r[2] - q[2] * r[1])
        - p[1] * (q[0] * r[2] - q[2] * r[0])
        + p[2] * (q[0] * r[1] - q[1] * r[0])
    )


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def orient(p: SpherePoint, q: SpherePoint, r: SpherePoint) -> int:
    """Orientation of an ordered triple: the sign of det(p, q, r)."""
    return _sign(det3(p.vec, q.vec, r.vec))


def lift_planar(x: Rational | int, y: Rational | int) -> SpherePoint:
    """Map a planar rational point to the upper hemisphere direction (x, y, 1).

    Planar orientation of any triple equals the orientation of its lifts.
    """
    return sphere_point_from_rationals((Fraction(x), Fraction(y), Fraction(1)))


def antipode(p: SpherePoint) -> SpherePoint:
    return -p


def cross(p: Vec3, q: Vec3) -> Vec3:
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def dot(p: Vec3, q: Vec3) -> int:
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def cross_dir(p: SpherePoint, q: SpherePoint) -> SpherePoint:
    """Primitive direction of p x q.

    This is the center of a hemisphere whose boundary great circle passes
    through +-p and +-q; sign(<r, p x q>) equals orient(p, q, r) for all r.
    """
    c = cross(p.vec, q.vec)
    if c == (0, 0, 0):
        raise DegenerateAnchor(f"parallel directions {p} and {q}")
    return SpherePoint(*c)


def _perp_toward(a: Vec3, b: Vec3) -> Vec3:
    """Integer vector orthogonal to b, with positive dot against a.

    Requires a, b non-parallel.  This is |b|^2 a - <a,b> b, whose dot with a
    is |a|^2|b|^2 - <a,b>^2 > 0 by Cauchy-Schwarz.
    """
    bb = dot(b, b)
    ab = dot(a, b)
    return (bb * a[0] - ab * b[0], bb * a[1] - ab * b[1], bb * a[2] - ab * b[2])


def find_hemisphere_witness(points: Sequence[SpherePoint]) -> Optional[Vec3]:
    """Find an integer direction c with <p, c> > 0 for every point, if one exists.

    Tries cheap candidate directions first and falls back to an exact scan
    for a supporting 2-face of the cone spanned by the points.  Under the
    general-position rules used here, the scan is a complete decision
    procedure: it fails exactly when the origin lies in the convex hull of
    the directions.
    """
    vecs = [p.vec for p in points]
    if not vecs:
        return (0, 0, 1)
    if len(vecs) == 1:
        return vecs[0]

    for cand in ((0, 0, 1), (0, 0, -1), _vec_sum(vecs)):
        if cand != (0, 0, 0) and all(dot(v, cand) > 0 for v in vecs):
            return cand

    for i, j in combinations(range(len(vecs)), 2):
        c = cross(vecs[i], vecs[j])
        if c == (0, 0, 0):
            return None  # antipodal or equal pair: no open hemisphere
        side = 0
        for k, v in enumerate(vecs):
            if k in (i, j):
                continue
            s = _sign(dot(v, c))
            if s == 0:
                side = None  # coplanar with the pair; not a clean face
                break
            if side == 0:
                side = s
            elif s != side:
                side = None
                break
        if side is None:
            continue
        if side == 0:
            side = 1  # only the pair itself, n == 2
        n_face = tuple(side * x for x in c)
        wi = _perp_toward(vecs[i], vecs[j])
        wj = _perp_toward(vecs[j], vecs[i])
        w = (wi[0] + wj[0], wi[1] + wj[1], wi[2] + wj[2])
        slack = max((abs(dot(v, w)) for v in vecs), default=0) + 1
        witness = tuple(slack * a + b for a, b in zip(n_face, w))
        if all(dot(v, witness) > 0 for v in vecs):
            return witness
    return None


def _vec_sum(vecs: Iterable[Vec3]) -> Vec3:
    sx = sy = sz = 0
    for v in vecs:
        sx += v[0]
        sy += v[1]
        sz += v[2]
    return (sx, sy, sz)


@dataclass(frozen=True)
class GeneralPositionReport:
    ok: bool
    witness: Optional[tuple[int, int, int]] = None


@dataclass(frozen=True)
class AffineConfig:
    """An ordered labeled point set contained in an open hemisphere.

    ``witness`` is an integer direction with positive dot product against
    every point; it certifies the open-hemisphere invariant and seeds the
    exact convex-hull routines.
    """

    points: tuple[SpherePoint, ...]
    witness: Vec3

    @property
    def n(self) -> int:
        return len(self.points)


def affine_config(
    points: Iterable[SpherePoint],
    witness: Optional[Vec3] = None,
    check: bool = True,
) -> AffineConfig:
    pts = tuple(points)
    if check:
        seen = {}
        for k, p in enumerate(pts):
            if p in seen:
                raise NotGeneralPosition(
                    f"duplicate direction at indices {seen[p]} and {k}"
                )
            seen[p] = k
        rep = _scan_affine_triples(pts)
        if not rep.ok:
            raise NotGeneralPosition(
                f"zero orientation at triple {rep.witness}", witness=rep.witness
            )
    if witness is not None and all(dot(p.vec, witness) > 0 for p in pts):
        return AffineConfig(pts, witness)
    found = find_hemisphere_witness(pts)
    if found is None:
        raise NotAffine("points are not contained in an open hemisphere")
    return AffineConfig(pts, found)


@dataclass(frozen=True)
class ProjectiveConfig:
    """An antipodal 2n-point set, stored as n representatives.

    Full point k is reps[k] for k < n and -reps[k - n] for k >= n, so the
    antipode of index k is (k + n) mod 2n.
    """

    reps: tuple[SpherePoint, ...]

    @property
    def n(self) -> int:
        return len(self.reps)

    def full_points(self) -> tuple[SpherePoint, ...]:
        return self.reps + tuple(-p for p in self.reps)

    def point(self, k: int) -> SpherePoint:
        n = len(self.reps)
        return self.reps[k] if k < n else -self.reps[k - n]

    def antipode_index(self, k: int) -> int:
        return (k + self.n) % (2 * self.n)


def projective_config(
    reps: Iterable[SpherePoint], check: bool = True
) -> ProjectiveConfig:
    rp = tuple(reps)
    if check:
        seen = {}
        for k, p in enumerate(rp):
            if p in seen:
                raise NotGeneralPosition(f"representatives {seen[p]} and {k} coincide")
            if -p in seen:
                raise NotGeneralPosition(
                    f"representatives {seen[-p]} and {k} are antipodal"
                )
            seen[p] = k
        rep = _scan_affine_triples(rp)
        if not rep.ok:
            raise NotGeneralPosition(
                f"zero orientation at representative triple {rep.witness}",
                witness=rep.witness,
            )
    return ProjectiveConfig(rp)


def _scan_affine_triples(pts: Sequence[SpherePoint]) -> GeneralPositionReport:
    vecs = [p.vec for p in pts]
    for i, j, k in combinations(range(len(vecs)), 3):
        if det3(vecs[i], vecs[j], vecs[k]) == 0:
            return GeneralPositionReport(False, (i, j, k))
    return GeneralPositionReport(True)


def check_general_position(
    cfg: Union[AffineConfig, ProjectiveConfig],
) -> GeneralPositionReport:
    """Scan all triples for the applicable general-position rule.

    For an affine set no triple may be coplanar with the origin.  For a
    projective set a zero-orientation triple must contain an antipodal
    pair, which over representatives reduces to the affine rule: a triple
    of the 2n points with no antipodal pair inside has orientation
    +-orient of the corresponding representative triple.
    """
    pts = cfg.reps if isinstance(cfg, ProjectiveConfig) else cfg.points
    return _scan_affine_triples(pts)


def projective_completion(a: AffineConfig) -> ProjectiveConfig:
    """The projective set A union -A, with A's points as representatives."""
    return projective_config(a.points)
