"""Vertex-face incidence maps and symmetric cycles.

The incidence map of a sphere map ``G`` has one vertex per vertex of
``G``, one vertex per face of ``G``, and one edge per corner (a vertex
appearing k times on a face walk contributes k parallel edges, which is
what makes the sphere embedding well defined).  It is the geometric dual
of the medial of ``G``: incidence edge ``t`` (one per dart of ``G``) runs
from the head vertex of dart ``t`` to the face through ``t``.

A cycle ``C`` of the embedded incidence map splits the sphere into two
discs.  ``C`` is *symmetric* when some automorphism of the embedded map
maps ``C`` onto itself and exchanges the contents of the two sides.  The
cycle is *antipodally realized* when such an automorphism can be chosen
orientation-reversing, involutive and fixed-point-free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContradictionError, NotProjective
from .links import EdgeSignedMap
from .maps import BOTH, REVERSING, MapIsomorphism, PlanarMap
from .projective import ProjectivityReport
from .symmetry import automorphisms


@dataclass(frozen=True)
class IncidenceMap:
    """Embedded incidence map with provenance tags on its vertices."""

    map: PlanarMap
    vertex_tags: tuple[tuple[str, int], ...]  # ("vertex", i) or ("face", i)


def incidence_graph(m: PlanarMap) -> IncidenceMap:
    """Incidence map of ``m`` with one edge per corner.

    Vertices are the vertices of ``m`` (tagged ``("vertex", i)``) followed
    by its faces (tagged ``("face", i)``).  Edge ``t`` carries darts
    ``2t`` (at the head of dart ``t`` of ``m``) and ``2t+1`` (at the face
    of ``t``); rotations around face vertices run against the face walk so
    that the embedding keeps the orientation of the sphere.
    """
    rotations: list[tuple[int, ...]] = []
    for rot in m.rotations:
        rotations.append(tuple(2 * m.pairing[b] for b in rot))
    for walk in m.faces:
        rotations.append(tuple(2 * x + 1 for x in reversed(walk)))
    pairing: list[int] = []
    for t in range(m.n_darts):
        pairing.extend((2 * t + 1, 2 * t))
    tags = tuple(("vertex", v) for v in range(m.n_vertices)) + tuple(
        ("face", f) for f in range(m.n_faces)
    )
    return IncidenceMap(PlanarMap(rotations, pairing), tags)


@dataclass(frozen=True)
class SymmetricCycle:
    """A cycle of the incidence map together with a side-swapping automorphism."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    sigma: MapIsomorphism
    half_length: int
    antipodally_realized: bool
    side_a_faces: frozenset[int]
    side_b_faces: frozenset[int]

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": list(self.edges),
            "half_length": self.half_length,
            "antipodally_realized": self.antipodally_realized,
            "sigma": {
                "darts": list(self.sigma.darts),
                "orientation": self.sigma.orientation,
            },
            "side_a_faces": sorted(self.side_a_faces),
            "side_b_faces": sorted(self.side_b_faces),
        }


def _enumerate_cycles(m: PlanarMap, max_length: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All simple cycles with at most ``max_length`` edges.

    Returns ``(vertices, edges)`` pairs; ``vertices[0]`` is the smallest
    vertex on the cycle and of the two traversal directions the one with
    the lexicographically smaller edge tuple is kept.  Parallel edges give
    honest 2-cycles.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(m.n_vertices)]
    for i, (d, dd) in enumerate(m.edges):
        u, v = m.dart_vertex[d], m.dart_vertex[dd]
        adj[u].append((i, v))
        adj[v].append((i, u))

    found: dict[frozenset[int], tuple[tuple[int, ...], tuple[int, ...]]] = {}

    def record(vertices: list[int], edges: list[int]) -> None:
        key = frozenset(edges)
        fwd = (tuple(vertices), tuple(edges))
        rev_vertices = (vertices[0],) + tuple(reversed(vertices[1:]))
        rev_edges = tuple(reversed(edges))
        best = fwd if fwd[1] <= rev_edges else (rev_vertices, rev_edges)
        prev = found.get(key)
        if prev is None or best[1] < prev[1]:
            found[key] = best

    def extend(start: int, v: int, vertices: list[int], edges: list[int], used: set[int]):
        for eid, w in adj[v]:
            if eid in used:
                continue
            if w == start and len(edges) >= 1:
                record(vertices, edges + [eid])
            if len(edges) + 1 >= max_length:
                continue
            if w > start and w not in vertices:
                used.add(eid)
                extend(start, w, vertices + [w], edges + [eid], used)
                used.remove(eid)

    for start in range(m.n_vertices):
        extend(start, start, [start], [], set())

    cycles = [c for c in found.values() if len(c[1]) >= 2]
    cycles.sort(key=lambda c: (len(c[1]), c[1]))
    return cycles


def cycle_sides(m: PlanarMap, cycle_edges: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    """The two face regions a cycle cuts the sphere into.

    Faces are connected when they share a non-cycle edge; a simple cycle
    on the sphere yields exactly two regions.
    """
    comp = [-1] * m.n_faces
    n_comp = 0
    for f0 in range(m.n_faces):
        if comp[f0] != -1:
            continue
        comp[f0] = n_comp
        queue = [f0]
        while queue:
            f = queue.pop()
            for d in m.faces[f]:
                if m.edge_of_dart[d] in cycle_edges:
                    continue
                g = m.dart_face[m.pairing[d]]
                if comp[g] == -1:
                    comp[g] = n_comp
                    queue.append(g)
        n_comp += 1
    if n_comp != 2:
        raise ContradictionError(
            f"cycle split the sphere into {n_comp} face regions instead of 2"
        )
    side_a = frozenset(f for f, c in enumerate(comp) if c == 0)
    side_b = frozenset(f for f, c in enumerate(comp) if c == 1)
    return side_a, side_b


def sigma_qualifies(
    sigma: MapIsomorphism,
    cycle_edges: frozenset[int],
    side_a: frozenset[int],
    side_b: frozenset[int],
) -> bool:
    """Does ``sigma`` fix the cycle setwise and exchange its two sides?"""
    emap = sigma.edge_map()
    if {emap[e] for e in cycle_edges} != cycle_edges:
        return False
    fmap = sigma.face_map()
    return {fmap[f] for f in side_a} == side_b and {fmap[f] for f in side_b} == side_a


def _is_antipodal_auto(iso: MapIsomorphism) -> bool:
    if iso.orientation != REVERSING or not iso.is_involution():
        return False
    return (
        all(i != j for i, j in enumerate(iso.vertex_map()))
        and all(i != j for i, j in enumerate(iso.edge_map()))
        and all(i != j for i, j in enumerate(iso.face_map()))
    )


def symmetric_cycles(g: PlanarMap, max_length: int | None = None) -> list[SymmetricCycle]:
    """All symmetric cycles of the incidence map of ``g``.

    ``max_length`` bounds the exhaustive cycle search and defaults to the
    number of incidence vertices.  Every returned cycle stores one
    witnessing automorphism, an antipodal one whenever any qualifying
    automorphism is antipodal.
    """
    imap = incidence_graph(g)
    m = imap.map
    if max_length is None:
        max_length = m.n_vertices
    autos = automorphisms(m, BOTH)
    antipodal = [_is_antipodal_auto(a) for a in autos]

    out = []
    for vertices, edges in _enumerate_cycles(m, max_length):
        edge_set = frozenset(edges)
        side_a, side_b = cycle_sides(m, edge_set)
        qualifying = [
            i for i, a in enumerate(autos) if sigma_qualifies(a, edge_set, side_a, side_b)
        ]
        if not qualifying:
            continue
        antip = [i for i in qualifying if antipodal[i]]
        pick = antip[0] if antip else qualifying[0]
        if len(edges) % 2 != 0:
            raise ContradictionError("symmetric cycle of odd length in a bipartite map")
        out.append(
            SymmetricCycle(
                vertices=vertices,
                edges=tuple(edges),
                sigma=autos[pick],
                half_length=len(edges) // 2,
                antipodally_realized=bool(antip),
                side_a_faces=side_a,
                side_b_faces=side_b,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Parity of symmetric cycles against witness color classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParityConsistencyReport:
    entries: tuple[dict, ...]
    matches: int
    mismatches: int
    note: str

    def to_json_dict(self) -> dict:
        return {
            "entries": list(self.entries),
            "matches": self.matches,
            "mismatches": self.mismatches,
            "note": self.note,
        }


_PARITY_NOTE = (
    "informational only: half-length parity of antipodally realized symmetric "
    "cycles is compared with the color class of each corresponding accepting "
    "witness; mismatches are reported, never raised"
)


def transport_witness_to_incidence(
    g: EdgeSignedMap, witness_darts: tuple[int, ...], imap: IncidenceMap
) -> MapIsomorphism:
    """Carry an antipodal witness of the medial onto the incidence map.

    The incidence map is the dual of the medial with dart ``2t+r`` of
    medial edge ``t`` renamed to ``2t+(1-r)``, so composing a reversing
    medial automorphism with the medial pairing yields the corresponding
    reversing automorphism of the incidence map on identical dart ids.
    """
    med = g.map.medial()
    darts = tuple(med.pairing[witness_darts[x]] for x in range(med.n_darts))
    iso = MapIsomorphism(imap.map, imap.map, darts, REVERSING)
    iso.verify()
    return iso


def parity_consistency(
    g: EdgeSignedMap,
    report: ProjectivityReport,
    cycles: list[SymmetricCycle],
) -> ParityConsistencyReport:
    """Compare cycle half-length parity with accepting witness color classes.

    Color-reversing witnesses should go with odd half-length, preserving
    with even.  Only antipodally realized cycles whose sides are actually
    exchanged by the transported witness take part.  The comparison is
    reported, not asserted.
    """
    if not report.projective:
        raise NotProjective("parity consistency applies to accepted presentations only")
    imap = incidence_graph(g.map)
    entries = []
    matches = 0
    mismatches = 0
    for wi, (witness, cls) in enumerate(report.witnesses):
        if not cls.accepting():
            continue
        sigma = transport_witness_to_incidence(g, witness.involution.darts, imap)
        expected = "odd" if cls.color == "reversing" else "even"
        for ci, cyc in enumerate(cycles):
            if not cyc.antipodally_realized:
                continue
            if not sigma_qualifies(
                sigma, frozenset(cyc.edges), cyc.side_a_faces, cyc.side_b_faces
            ):
                continue
            parity = "odd" if cyc.half_length % 2 == 1 else "even"
            ok = parity == expected
            matches += ok
            mismatches += not ok
            entries.append(
                {
                    "cycle_index": ci,
                    "witness_index": wi,
                    "half_length": cyc.half_length,
                    "parity": parity,
                    "witness_color": cls.color,
                    "expected_parity": expected,
                    "match": ok,
                }
            )
    return ParityConsistencyReport(tuple(entries), matches, mismatches, _PARITY_NOTE)
