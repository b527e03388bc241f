"""Combinatorial maps on the sphere.

A map is an embedding of a connected multigraph in the 2-sphere, recorded
purely combinatorially as a rotation system: every edge contributes two
darts (half-edges), each vertex carries the counterclockwise cyclic order
of the darts based at it, and a fixed-point-free involution pairs the two
darts of each edge.

Conventions used throughout the package:

* Darts are integers ``0..2E-1``.  Maps constructed here (duals, medials,
  incidence maps) always pair dart ``2e`` with ``2e+1`` so that edge ``e``
  is the pair ``(2e, 2e+1)``; maps loaded from files may use any pairing.
* Edge ``i`` is the ``i``-th dart pair in increasing order of the smaller
  dart.
* Face walks are the orbits of ``d -> sigma(alpha(d))`` where ``sigma`` is
  rotation-next and ``alpha`` the pairing.  With counterclockwise
  rotations this walk keeps the traced face on the *right* of every dart,
  i.e. it runs clockwise around the face interior.  Faces are indexed by
  their minimal dart, in increasing order, so face indices are
  deterministic for a given input.
* ``dual`` reverses each face walk when turning it into a rotation, which
  yields the geometric dual embedded with the *same* orientation of the
  sphere.  Consequently an antipodal realization of self-duality shows up
  as an orientation-reversing isomorphism onto the dual, matching the fact
  that the antipodal homeomorphism of the sphere reverses orientation.

All objects are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    MalformedPairing,
    MalformedRotations,
    MapError,
    NotConnected,
    NotSpherical,
)

PRESERVING = "preserving"
REVERSING = "reversing"
EITHER = "either"
BOTH = "both"


def _face_orbits(next_dart: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Orbits of ``next_dart``, each starting at its minimal dart."""
    n = len(next_dart)
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        walk = []
        d = start
        while not seen[d]:
            seen[d] = True
            walk.append(d)
            d = next_dart[d]
        orbits.append(tuple(walk))
    return tuple(orbits)


class PlanarMap:
    """A connected multigraph embedded in the sphere.

    Parameters
    ----------
    rotations:
        One cyclic dart sequence per vertex, counterclockwise.
    pairing:
        ``pairing[d]`` is the other dart of the edge containing ``d``.

    Raises
    ------
    MalformedPairing, MalformedRotations, NotConnected, NotSpherical
    """

    __slots__ = (
        "rotations",
        "pairing",
        "faces",
        "dart_vertex",
        "dart_face",
        "edges",
        "edge_of_dart",
        "_sigma",
        "_sigma_inv",
    )

    def __init__(self, rotations: Iterable[Iterable[int]], pairing: Iterable[int]):
        rotations = tuple(tuple(int(d) for d in rot) for rot in rotations)
        pairing = tuple(int(d) for d in pairing)
        n = len(pairing)

        if n == 0 or n % 2 != 0:
            raise MalformedPairing(f"pairing must have positive even length, got {n}")
        for d, p in enumerate(pairing):
            if not 0 <= p < n:
                raise MalformedPairing(f"pairing[{d}]={p} out of range")
            if p == d:
                raise MalformedPairing(f"dart {d} is paired with itself")
            if pairing[p] != d:
                raise MalformedPairing(f"pairing is not an involution at dart {d}")

        counts = [0] * n
        for rot in rotations:
            if not rot:
                raise MalformedRotations("empty rotation (isolated vertex) not allowed")
            for d in rot:
                if not 0 <= d < n:
                    raise MalformedRotations(f"dart {d} out of range 0..{n - 1}")
                counts[d] += 1
        if any(c != 1 for c in counts):
            bad = next(d for d, c in enumerate(counts) if c != 1)
            raise MalformedRotations(f"dart {bad} appears {counts[bad]} times in rotations")

        self.rotations = rotations
        self.pairing = pairing

        sigma = [0] * n
        sigma_inv = [0] * n
        dart_vertex = [0] * n
        for v, rot in enumerate(rotations):
            k = len(rot)
            for i, d in enumerate(rot):
                sigma[d] = rot[(i + 1) % k]
                sigma_inv[d] = rot[(i - 1) % k]
                dart_vertex[d] = v
        self._sigma = tuple(sigma)
        self._sigma_inv = tuple(sigma_inv)
        self.dart_vertex = tuple(dart_vertex)

        # Connectivity over the moves d -> sigma(d) and d -> alpha(d).
        seen = [False] * n
        stack = [rotations[0][0]]
        seen[stack[0]] = True
        while stack:
            d = stack.pop()
            for e in (sigma[d], pairing[d]):
                if not seen[e]:
                    seen[e] = True
                    stack.append(e)
        if not all(seen):
            raise NotConnected("underlying graph is not connected")

        self.faces = _face_orbits(tuple(sigma[pairing[d]] for d in range(n)))
        dart_face = [0] * n
        for f, walk in enumerate(self.faces):
            for d in walk:
                dart_face[d] = f
        self.dart_face = tuple(dart_face)

        euler = len(rotations) - n // 2 + len(self.faces)
        if euler != 2:
            raise NotSpherical(euler)

        self.edges = tuple(
            (d, pairing[d]) for d in range(n) if d < pairing[d]
        )
        edge_of_dart = [0] * n
        for i, (d, dd) in enumerate(self.edges):
            edge_of_dart[d] = i
            edge_of_dart[dd] = i
        self.edge_of_dart = tuple(edge_of_dart)

    # -- basic accessors -------------------------------------------------

    @property
    def n_darts(self) -> int:
        return len(self.pairing)

    @property
    def n_vertices(self) -> int:
        return len(self.rotations)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def sigma(self, d: int) -> int:
        """Next dart counterclockwise around the vertex of ``d``."""
        return self._sigma[d]

    def sigma_inv(self, d: int) -> int:
        return self._sigma_inv[d]

    def alpha(self, d: int) -> int:
        """The other dart of the edge of ``d``."""
        return self.pairing[d]

    def phi(self, d: int) -> int:
        """Next dart along the face walk through ``d``."""
        return self._sigma[self.pairing[d]]

    def vertex_degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rotations)

    def face_degrees(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.faces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlanarMap):
            return NotImplemented
        return self.rotations == other.rotations and self.pairing == other.pairing

    def __hash__(self) -> int:
        return hash((self.rotations, self.pairing))

    def __repr__(self) -> str:
        return (
            f"PlanarMap(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces})"
        )

    # -- derived maps ----------------------------------------------------

    def dual(self) -> "PlanarMap":
        """Geometric dual, embedded with the same orientation.

        The dual shares the dart set and pairing of this map; its vertex
        rotations are the reversed face walks.  ``dual(dual(m))`` equals
        ``m`` with every rotation conjugated by the pairing, an
        orientation-preserving isomorphism.
        """
        return PlanarMap(tuple(tuple(reversed(w)) for w in self.faces), self.pairing)

    def mirror(self) -> "PlanarMap":
        """The same map with the opposite orientation (rotations reversed)."""
        return PlanarMap(tuple(tuple(reversed(r)) for r in self.rotations), self.pairing)

    def medial(self) -> "MedialMap":
        """4-regular medial map; see :class:`MedialMap` for the labeling."""
        return MedialMap(self)

    # -- canonical certificate --------------------------------------------

    def canonical_code(self) -> tuple:
        """Minimal relabeled encoding over all start darts and orientations.

        Two maps have equal codes iff they are isomorphic under policy
        ``either``; use for deduplication.
        """
        best = None
        for mm in (self, self.mirror()):
            n = mm.n_darts
            for start in range(n):
                label = {start: 0}
                order = [start]
                i = 0
                while i < len(order):
                    d = order[i]
                    i += 1
                    for e in (mm._sigma[d], mm.pairing[d]):
                        if e not in label:
                            label[e] = len(order)
                            order.append(e)
                code = (
                    tuple(label[mm._sigma[d]] for d in order),
                    tuple(label[mm.pairing[d]] for d in order),
                )
                if best is None or code < best:
                    best = code
        return best


class MedialMap(PlanarMap):
    """Medial of a map: one 4-valent vertex on each source edge.

    Medial vertex ``i`` sits on source edge ``i``.  Medial edge ``t`` (one
    per source dart ``t``) joins the vertices on ``edge(t)`` and
    ``edge(phi(t))`` and carries darts ``2t`` and ``2t+1``.  Every medial
    face is inscribed either in a face of the source (tagged
    ``("face", f)``) or around a source vertex (tagged ``("vertex", v)``),
    and the two kinds alternate across every medial edge.
    """

    __slots__ = ("source", "face_kinds")

    def __init__(self, source: PlanarMap):
        n = source.n_darts
        phi_inv = [0] * n
        for d in range(n):
            phi_inv[source.phi(d)] = d

        rotations = []
        for d, dd in source.edges:
            # Counterclockwise around the medial vertex on edge {d, dd}.
            rotations.append((2 * d, 2 * phi_inv[dd] + 1, 2 * dd, 2 * phi_inv[d] + 1))
        pairing = []
        for t in range(n):
            pairing.extend((2 * t + 1, 2 * t))

        super().__init__(rotations, pairing)
        self.source = source

        kinds = []
        for walk in self.faces:
            t, r = divmod(walk[0], 2)
            if r == 0:
                # Orbit of "outgoing" darts: inscribed in a source face.
                kinds.append(("face", source.dart_face[t]))
            else:
                # Orbit of "incoming" darts: surrounds the head of t.
                kinds.append(("vertex", source.dart_vertex[source.pairing[t]]))
        self.face_kinds = tuple(kinds)

    @property
    def vertex_source_edge(self) -> tuple[int, ...]:
        """Source edge under each medial vertex (the identity by construction)."""
        return tuple(range(self.n_vertices))


def build_map(
    vertex_rotations: Iterable[Iterable[int]], edge_pairing: Iterable[int]
) -> PlanarMap:
    """Validate a rotation system and return the map it defines."""
    return PlanarMap(vertex_rotations, edge_pairing)


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MapIsomorphism:
    """A dart bijection carrying one map onto another.

    ``orientation`` is ``"preserving"`` when rotations map to rotations
    with the same cyclic order and ``"reversing"`` when every cyclic order
    flips (the witness composed with a mirror image).
    """

    source: PlanarMap
    target: PlanarMap
    darts: tuple[int, ...]
    orientation: str

    def verify(self) -> None:
        """Raise :class:`MapError` unless this is a valid isomorphism."""
        a, b, psi = self.source, self.target, self.darts
        n = a.n_darts
        if b.n_darts != n or len(psi) != n or sorted(psi) != list(range(n)):
            raise MapError("dart bijection is not a permutation of the right size")
        if self.orientation not in (PRESERVING, REVERSING):
            raise MapError(f"unknown orientation {self.orientation!r}")
        for d in range(n):
            if psi[a.pairing[d]] != b.pairing[psi[d]]:
                raise MapError(f"pairing not respected at dart {d}")
            if self.orientation == PRESERVING:
                if psi[a.sigma(d)] != b.sigma(psi[d]):
                    raise MapError(f"rotation order not preserved at dart {d}")
            else:
                if psi[a.sigma(d)] != b.sigma_inv(psi[d]):
                    raise MapError(f"rotation order not reversed at dart {d}")

    def vertex_map(self) -> tuple[int, ...]:
        """Image vertex index for each source vertex."""
        return tuple(
            self.target.dart_vertex[self.darts[rot[0]]] for rot in self.source.rotations
        )

    def edge_map(self) -> tuple[int, ...]:
        """Image edge index for each source edge."""
        return tuple(self.target.edge_of_dart[self.darts[d]] for d, _ in self.source.edges)

    def face_map(self) -> tuple[int, ...]:
        """Image face index for each source face.

        For a reversing witness the image of the face through dart ``d`` is
        the face through ``alpha(psi(d))``: reversal swaps the two sides of
        every edge.
        """
        out = []
        for walk in self.source.faces:
            d = self.darts[walk[0]]
            if self.orientation == REVERSING:
                d = self.target.pairing[d]
            out.append(self.target.dart_face[d])
        return tuple(out)

    def is_involution(self) -> bool:
        psi = self.darts
        return all(psi[psi[d]] == d for d in range(len(psi)))

    def inverse(self) -> "MapIsomorphism":
        inv = [0] * len(self.darts)
        for d, e in enumerate(self.darts):
            inv[e] = d
        return MapIsomorphism(self.target, self.source, tuple(inv), self.orientation)

    def sort_key(self) -> tuple:
        return (0 if self.orientation == PRESERVING else 1, self.darts)


def _dart_profile(m: PlanarMap) -> tuple[tuple[int, int, int], ...]:
    # Invariant fingerprint per dart used to prune isomorphism roots.
    return tuple(
        (
            len(m.rotations[m.dart_vertex[d]]),
            len(m.faces[m.dart_face[d]]),
            len(m.faces[m.dart_face[m.pairing[d]]]),
        )
        for d in range(m.n_darts)
    )


def _propagate(a: PlanarMap, b: PlanarMap, image0: int, reverse: bool) -> tuple[int, ...] | None:
    """Extend ``dart 0 -> image0`` to a full isomorphism, or return None.

    A map isomorphism between connected maps is forced by the image of one
    dart: images propagate along ``sigma`` and ``alpha``.
    """
    n = a.n_darts
    psi = [-1] * n
    psi[0] = image0
    stack = [0]
    while stack:
        d = stack.pop()
        e = psi[d]
        bn = b.sigma_inv(e) if reverse else b.sigma(e)
        for nd, ne in ((a.sigma(d), bn), (a.pairing[d], b.pairing[e])):
            if psi[nd] == -1:
                psi[nd] = ne
                stack.append(nd)
            elif psi[nd] != ne:
                return None
    if sorted(psi) != list(range(n)):
        return None
    return tuple(psi)


def _quick_mismatch(a: PlanarMap, b: PlanarMap) -> bool:
    return (
        a.n_darts != b.n_darts
        or a.n_vertices != b.n_vertices
        or a.n_faces != b.n_faces
        or sorted(a.vertex_degrees()) != sorted(b.vertex_degrees())
        or sorted(a.face_degrees()) != sorted(b.face_degrees())
    )


def _isomorphisms(a: PlanarMap, b: PlanarMap, policy: str):
    if policy == EITHER:
        kinds = (False, True)
    elif policy == PRESERVING:
        kinds = (False,)
    elif policy == REVERSING:
        kinds = (True,)
    else:
        raise ValueError(f"unknown policy {policy!r}")
    if _quick_mismatch(a, b):
        return
    prof_a = _dart_profile(a)
    for reverse in kinds:
        bb = b.mirror() if reverse else b
        prof_b = _dart_profile(bb)
        root = prof_a[0]
        for image0 in range(b.n_darts):
            if prof_b[image0] != root:
                continue
            psi = _propagate(a, bb, image0, False)
            if psi is not None:
                yield MapIsomorphism(a, b, psi, REVERSING if reverse else PRESERVING)


def is_isomorphic(a: PlanarMap, b: PlanarMap, policy: str = EITHER) -> MapIsomorphism | None:
    """First isomorphism ``a -> b`` under the policy, or ``None``.

    The search order (orientation kind, then image of dart 0) is fixed, so
    the returned witness is deterministic.
    """
    for iso in _isomorphisms(a, b, policy):
        return iso
    return None


def all_isomorphisms(a: PlanarMap, b: PlanarMap, policy: str = EITHER) -> list[MapIsomorphism]:
    """Every isomorphism ``a -> b`` under the policy, in canonical order."""
    return sorted(_isomorphisms(a, b, policy), key=MapIsomorphism.sort_key)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def map_to_dict(m: PlanarMap) -> dict:
    d: dict = {
        "rotations": [list(r) for r in m.rotations],
        "pairing": list(m.pairing),
    }
    if isinstance(m, MedialMap):
        d["vertex_source_edges"] = list(m.vertex_source_edge)
        d["face_kinds"] = [[kind, idx] for kind, idx in m.face_kinds]
    return d


def map_from_dict(data: dict) -> PlanarMap:
    try:
        rotations = data["rotations"]
        pairing = data["pairing"]
    except (KeyError, TypeError) as exc:
        raise MalformedRotations(f"map object needs 'rotations' and 'pairing': {exc}")
    return PlanarMap(rotations, pairing)


def signs_from_dict(data: dict, n_edges: int) -> tuple[int, ...]:
    """Parse the optional ``edge_signs`` list of ``"+"``/``"-"`` strings."""
    raw = data.get("edge_signs")
    if raw is None:
        raise MapError("input has no 'edge_signs' field")
    if len(raw) != n_edges:
        raise MapError(f"expected {n_edges} edge signs, got {len(raw)}")
    out = []
    for s in raw:
        if s not in ("+", "-"):
            raise MapError(f"edge sign must be '+' or '-', got {s!r}")
        out.append(1 if s == "+" else -1)
    return tuple(out)


def signs_to_list(signs: Sequence[int]) -> list[str]:
    return ["+" if s > 0 else "-" for s in signs]


def dumps_json(payload: dict) -> str:
    """Byte-deterministic JSON used by every writer in the package."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def map_to_dot(m: PlanarMap, bold_edges: Iterable[int] = ()) -> str:
    """GraphViz rendering of the underlying multigraph.

    Face walks are emitted as comments; ``bold_edges`` are drawn thick
    (used to highlight one cycle of an incidence map).
    """
    bold = set(bold_edges)
    lines = ["graph {"]
    for f, walk in enumerate(m.faces):
        lines.append(f"  // face {f}: darts {' '.join(str(d) for d in walk)}")
    for v in range(m.n_vertices):
        lines.append(f"  {v};")
    for i, (d, dd) in enumerate(m.edges):
        u, w = m.dart_vertex[d], m.dart_vertex[dd]
        attrs = f'label="e{i}"'
        if i in bold:
            attrs += ", style=bold, penwidth=3"
        lines.append(f"  {u} -- {w} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
