"""Deciding projectivity of the link presented by an edge-signed map.

A link embedded in compactified 3-space is invariant under the negative
inversion ``x -> -x/|x|^2`` exactly when it is a projective link (a link
in real projective 3-space); pulling that symmetry down to the diagram
sphere turns it into a decidable condition on the presenting edge-signed
map ``(G, signs)``:

* the medial of ``G`` must be antipodally symmetric, and
* some antipodal witness must act on the labeled medial either preserving
  both the checkerboard colors and the vertex signs, or reversing both.

``check_projective`` decides exactly that for the given presentation; it
does not search over other presentations of the same abstract link.

The module also ships a numeric check of the identity that justifies the
reduction: the stereographic projection from the unit 3-sphere conjugates
the antipodal map of the 3-sphere into the negative inversion of
compactified 3-space.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import (
    ContradictionError,
    NotAntipodallySelfDual,
    NotAWitness,
    NotProjective,
    PoleInput,
)
from .links import EdgeSignedMap, LabeledMedial, is_alternating_signature, labeled_medial
from .maps import MapError, PlanarMap
from .symmetry import (
    AntipodalWitness,
    antipodal_involutions,
    is_antipodally_self_dual,
)

PRESERVING = "preserving"
REVERSING = "reversing"
NEITHER = "neither"

FORCES_NONALTERNATING = "forces_nonalternating"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class WitnessClassification:
    """How an antipodal witness acts on face colors and vertex signs."""

    color: str
    sign: str

    def accepting(self) -> bool:
        """True iff the behavior is (preserving, preserving) or (reversing, reversing)."""
        return self.color == self.sign and self.color != NEITHER


@dataclass(frozen=True)
class ProjectivityReport:
    medial_antipodal: bool
    witnesses: tuple[tuple[AntipodalWitness, WitnessClassification], ...]
    projective: bool
    accepting_witness: int | None

    def to_json_dict(self) -> dict:
        return {
            "medial_antipodally_symmetric": self.medial_antipodal,
            "witnesses": [
                {
                    "darts": list(w.involution.darts),
                    "orientation": w.involution.orientation,
                    "color": c.color,
                    "sign": c.sign,
                }
                for w, c in self.witnesses
            ],
            "projective": self.projective,
            "accepting_witness": self.accepting_witness,
        }


def classify_witness(lm: LabeledMedial, w: AntipodalWitness) -> WitnessClassification:
    """Color and sign behavior of an antipodal witness of ``lm.medial``.

    The color class is read off one antipodal face pair and then verified
    on all pairs; for a properly 2-colored medial the classes cannot mix,
    so ``neither`` for color would expose an internal inconsistency.  Sign
    behavior legitimately degenerates to ``neither`` for mixed signatures.
    """
    iso = w.involution
    if iso.source != lm.medial or iso.target != lm.medial:
        raise NotAWitness("witness does not belong to this labeled medial")
    try:
        w.verify()
    except MapError as exc:
        raise NotAWitness(str(exc))

    fmap = iso.face_map()
    colors = lm.face_colors
    same = colors[0] == colors[fmap[0]]
    color = PRESERVING if same else REVERSING
    for f, g in enumerate(fmap):
        if (colors[f] == colors[g]) != same:
            color = NEITHER
            break

    vmap = iso.vertex_map()
    signs = lm.vertex_signs
    same_signs = all(signs[v] == signs[w_] for v, w_ in enumerate(vmap))
    opposite_signs = all(signs[v] == -signs[w_] for v, w_ in enumerate(vmap))
    if same_signs:
        sign = PRESERVING
    elif opposite_signs:
        sign = REVERSING
    else:
        sign = NEITHER
    return WitnessClassification(color, sign)


def check_projective(g: EdgeSignedMap) -> ProjectivityReport:
    """Decide projectivity of the link presented by ``g``.

    Every antipodal witness of the medial is enumerated and classified;
    the presentation is accepted iff some witness preserves both colors
    and signs or reverses both.
    """
    lm = labeled_medial(g)
    witnesses = antipodal_involutions(lm.medial)
    classified = tuple((w, classify_witness(lm, w)) for w in witnesses)
    accepting = None
    for i, (_, cls) in enumerate(classified):
        if cls.accepting():
            accepting = i
            break
    return ProjectivityReport(
        medial_antipodal=bool(witnesses),
        witnesses=classified,
        projective=accepting is not None,
        accepting_witness=accepting,
    )


def duality_color_reversal(m: PlanarMap) -> bool:
    """For an antipodally self-dual map, check that color reversal is forced.

    Returns True iff every antipodal witness of the medial reverses the
    canonical checkerboard colors.  Raises
    :class:`NotAntipodallySelfDual` when the precondition fails.
    """
    if is_antipodally_self_dual(m) is None:
        raise NotAntipodallySelfDual("map admits no antipodal self-duality")
    lm = labeled_medial(EdgeSignedMap(m, (1,) * m.n_edges))
    for w in antipodal_involutions(lm.medial):
        if classify_witness(lm, w).color != REVERSING:
            return False
    return True


def nonalternating_criterion(g: EdgeSignedMap, report: ProjectivityReport) -> str:
    """Nonalternation test for an accepted presentation.

    When every accepting witness is color-reversing, acceptance forces
    sign reversal, which no constant signature can provide: the projective
    link cannot be alternating.  Returns ``"forces_nonalternating"`` in
    that case and ``"inconclusive"`` otherwise.
    """
    if not report.projective:
        raise NotProjective("criterion applies to accepted presentations only")
    accepting = [cls for _, cls in report.witnesses if cls.accepting()]
    if accepting and all(cls.color == REVERSING for cls in accepting):
        if is_alternating_signature(g):
            raise ContradictionError(
                "every accepting witness is color-reversing yet the signature is constant"
            )
        return FORCES_NONALTERNATING
    return INCONCLUSIVE


# ---------------------------------------------------------------------------
# Numeric check of the inversion identity
# ---------------------------------------------------------------------------

INFINITY = "infinity"
UNIT_TOLERANCE = 1e-12


def stereographic(x: tuple[float, float, float, float]):
    """Stereographic projection of the unit 3-sphere from its pole.

    ``(x, y, z, w) -> (x, y, z) / (1 - w)``; the pole ``w = 1`` maps to
    the point at infinity.
    """
    a, b, c, w = x
    if w == 1.0:
        return INFINITY
    s = 1.0 / (1.0 - w)
    return (a * s, b * s, c * s)


def invert_point(v):
    """Inversion ``v -> v/|v|^2`` with ``0`` and infinity exchanged."""
    if v == INFINITY:
        return (0.0, 0.0, 0.0)
    n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
    if n2 == 0.0:
        return INFINITY
    return (v[0] / n2, v[1] / n2, v[2] / n2)


def negate_point(v):
    if v == INFINITY:
        return INFINITY
    return (-v[0], -v[1], -v[2])


def antipodal_inversion_residual(x: tuple[float, float, float, float]) -> float:
    """Distance between the two sides of the conjugation identity at ``x``.

    Compares ``-invert(stereographic(x))`` with ``stereographic(-x)`` for
    a unit 4-vector; both sides infinite counts as residual 0.  For unit
    input at most the poles become infinite and then both sides do; if
    exactly one side is infinite, :class:`PoleInput` is raised.
    """
    norm = math.sqrt(sum(c * c for c in x))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"input must be a unit 4-vector, |x| = {norm}")
    left = negate_point(invert_point(stereographic(x)))
    right = stereographic(tuple(-c for c in x))
    if left == INFINITY and right == INFINITY:
        return 0.0
    if (left == INFINITY) != (right == INFINITY):
        raise PoleInput("exactly one side of the identity is infinite")
    return math.dist(left, right)


def max_residual_over_sample(samples: int, seed: int) -> float:
    """Largest residual over seeded random unit 4-vectors plus both poles."""
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        v = [rng.gauss(0.0, 1.0) for _ in range(4)]
        norm = math.sqrt(sum(c * c for c in v))
        if norm < 1e-6:
            continue
        x = tuple(c / norm for c in v)
        worst = max(worst, antipodal_inversion_residual(x))
    for pole in ((0.0, 0.0, 0.0, 1.0), (0.0, 0.0, 0.0, -1.0)):
        worst = max(worst, antipodal_inversion_residual(pole))
    return worst
