"""Automorphisms and antipodal structure of sphere maps.

The antipodal homeomorphism of the sphere is orientation-reversing and has
no fixed point.  A map is *antipodally symmetric* exactly when it admits a
combinatorial stand-in for that homeomorphism: an orientation-reversing
automorphism that is an involution on darts and fixes no vertex, edge or
face.  A self-dual map is *antipodally self-dual* when the duality itself
can be realized that way: an orientation-reversing involutive dart
bijection onto the dual that fixes no cell of the combined primal/dual
incidence structure (for edges this means no edge is sent to its own
crossing dual edge; a fixed flag would force a fixed edge, so the edge
condition is the binding one).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContradictionError, MapError
from .maps import (
    BOTH,
    EITHER,
    PRESERVING,
    REVERSING,
    MapIsomorphism,
    PlanarMap,
    all_isomorphisms,
    is_isomorphic,
)

SYMMETRY = "symmetry"
SELF_DUALITY = "self-duality"


@dataclass(frozen=True)
class AntipodalWitness:
    """An involution realizing antipodal symmetry or antipodal self-duality."""

    involution: MapIsomorphism
    kind: str  # SYMMETRY or SELF_DUALITY

    def verify(self) -> None:
        """Raise :class:`MapError` unless the witness is genuinely antipodal."""
        iso = self.involution
        iso.verify()
        if iso.orientation != REVERSING:
            raise MapError("antipodal witness must be orientation-reversing")
        if not iso.is_involution():
            raise MapError("antipodal witness must square to the identity on darts")
        if self.kind == SYMMETRY:
            if iso.source != iso.target:
                raise MapError("symmetry witness must be an automorphism")
            for name, images in (
                ("vertex", iso.vertex_map()),
                ("edge", iso.edge_map()),
                ("face", iso.face_map()),
            ):
                for i, j in enumerate(images):
                    if i == j:
                        raise MapError(f"antipodal witness fixes {name} {i}")
        elif self.kind == SELF_DUALITY:
            if iso.target != iso.source.dual():
                raise MapError("self-duality witness must target the dual map")
            _check_duality_fixed_points(iso)
        else:
            raise MapError(f"unknown witness kind {self.kind!r}")


def _dual_face_to_vertex(m: PlanarMap, dual: PlanarMap) -> tuple[int, ...]:
    # Face j of the dual is the pairing-conjugate of a rotation of m.
    return tuple(m.dart_vertex[m.pairing[walk[0]]] for walk in dual.faces)


def _check_duality_fixed_points(iso: MapIsomorphism) -> None:
    """Fixed-point-freeness of a duality on the combined incidence structure.

    The dual shares the dart set and pairing of the source, so edges keep
    their indices; a duality sending edge ``e`` to edge ``e`` would pin the
    crossing point of ``e`` and its dual edge.  Vertices go to faces and
    vice versa, so they can only be "fixed" as part of a fixed flag
    ``(v, e, f)`` with ``v -> f``, ``f -> v`` and ``e -> e``; that too
    requires a fixed edge, but we check the flags explicitly anyway.
    """
    m = iso.source
    emap = iso.edge_map()
    for e, img in enumerate(emap):
        if e == img:
            raise MapError(f"duality witness fixes edge {e}")
    vf = iso.vertex_map()  # vertex of m -> dual vertex = face index of m
    f2v = _dual_face_to_vertex(m, iso.target)
    fv = tuple(f2v[j] for j in iso.face_map())  # face of m -> vertex of m
    for d in range(m.n_darts):
        v = m.dart_vertex[d]
        e = m.edge_of_dart[d]
        f = m.dart_face[d]
        if vf[v] == f and fv[f] == v and emap[e] == e:
            raise MapError(f"duality witness fixes the flag at dart {d}")


def automorphisms(m: PlanarMap, policy: str = BOTH) -> list[MapIsomorphism]:
    """All automorphisms of ``m`` under the policy, in canonical order.

    An automorphism of a connected map is determined by the image of one
    dart, so there are at most ``2E`` per orientation class.
    """
    iso_policy = {PRESERVING: PRESERVING, REVERSING: REVERSING, BOTH: EITHER}[policy]
    autos = all_isomorphisms(m, m, iso_policy)
    for a in autos:
        a.verify()
    return autos


def antipodal_involutions(m: PlanarMap) -> list[AntipodalWitness]:
    """All antipodal symmetry witnesses of ``m``, in canonical order."""
    out = []
    for iso in automorphisms(m, REVERSING):
        if not iso.is_involution():
            continue
        if any(i == j for i, j in enumerate(iso.vertex_map())):
            continue
        if any(i == j for i, j in enumerate(iso.edge_map())):
            continue
        if any(i == j for i, j in enumerate(iso.face_map())):
            continue
        w = AntipodalWitness(iso, SYMMETRY)
        w.verify()
        out.append(w)
    return out


def is_antipodally_symmetric(m: PlanarMap) -> AntipodalWitness | None:
    """First antipodal symmetry witness in canonical order, or ``None``."""
    ws = antipodal_involutions(m)
    if not ws:
        return None
    if m.n_faces % 2 != 0:
        # An involution without fixed faces pairs the faces off.
        raise ContradictionError("antipodal witness found on a map with odd face count")
    return ws[0]


def is_self_dual(m: PlanarMap) -> MapIsomorphism | None:
    """A witness isomorphism onto the dual (either orientation), or ``None``."""
    return is_isomorphic(m, m.dual(), EITHER)


def antipodal_self_dualities(m: PlanarMap) -> list[AntipodalWitness]:
    """All antipodal self-duality witnesses of ``m``, in canonical order."""
    out = []
    for iso in all_isomorphisms(m, m.dual(), REVERSING):
        if not iso.is_involution():
            continue
        try:
            _check_duality_fixed_points(iso)
        except MapError:
            continue
        w = AntipodalWitness(iso, SELF_DUALITY)
        w.verify()
        out.append(w)
    return out


def is_antipodally_self_dual(m: PlanarMap) -> AntipodalWitness | None:
    """First antipodal self-duality witness, or ``None``.

    On success the medial of ``m`` must itself be antipodally symmetric;
    that implication is re-checked here and a violation raises
    :class:`ContradictionError`.
    """
    ws = antipodal_self_dualities(m)
    if not ws:
        return None
    if not antipodal_involutions(m.medial()):
        raise ContradictionError(
            "map is antipodally self-dual but its medial is not antipodally symmetric"
        )
    return ws[0]
