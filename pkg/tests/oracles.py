"""Independent reference implementations used to cross-check the package.

Everything here deliberately avoids the production code paths: faces are
recounted with a local walk, cycles are found by enumerating all edge
subsets, and cycle sides are rebuilt with union-find instead of the BFS
the package uses.
"""

from collections import Counter

from projlink import PlanarMap
from projlink.maps import BOTH, MapIsomorphism
from projlink.symmetry import automorphisms


def count_faces_by_walk(rotations, pairing) -> int:
    """Face count of a rotation system by direct orbit traversal."""
    nxt = {}
    for rot in rotations:
        for i, d in enumerate(rot):
            nxt[d] = rot[(i + 1) % len(rot)]
    phi = {d: nxt[pairing[d]] for d in nxt}
    seen = set()
    faces = 0
    for d in phi:
        if d in seen:
            continue
        faces += 1
        x = d
        while x not in seen:
            seen.add(x)
            x = phi[x]
    return faces


def _subset_is_cycle(m: PlanarMap, edge_ids: list[int]) -> bool:
    deg = Counter()
    for e in edge_ids:
        d, dd = m.edges[e]
        deg[m.dart_vertex[d]] += 1
        deg[m.dart_vertex[dd]] += 1
    if any(c != 2 for c in deg.values()):
        return False
    support = set(deg)
    if len(edge_ids) != len(support):
        return False
    # connectivity of the support via the chosen edges
    adj = {v: [] for v in support}
    for e in edge_ids:
        d, dd = m.edges[e]
        u, v = m.dart_vertex[d], m.dart_vertex[dd]
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(support))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == support


def _sides_by_union_find(m: PlanarMap, cycle: frozenset[int]):
    parent = list(range(m.n_faces))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, (d, dd) in enumerate(m.edges):
        if e in cycle:
            continue
        a, b = find(m.dart_face[d]), find(m.dart_face[dd])
        if a != b:
            parent[a] = b
    roots = {find(f) for f in range(m.n_faces)}
    assert len(roots) == 2, "cycle must cut the sphere into two regions"
    r = sorted(roots)
    side_a = frozenset(f for f in range(m.n_faces) if find(f) == r[0])
    side_b = frozenset(f for f in range(m.n_faces) if find(f) == r[1])
    return side_a, side_b


def _is_antipodal(iso: MapIsomorphism) -> bool:
    if iso.orientation != "reversing" or not iso.is_involution():
        return False
    return (
        all(i != j for i, j in enumerate(iso.vertex_map()))
        and all(i != j for i, j in enumerate(iso.edge_map()))
        and all(i != j for i, j in enumerate(iso.face_map()))
    )


def oracle_symmetric_cycles(incidence: PlanarMap):
    """Symmetric cycles of an embedded map by exhaustive subset search.

    Returns ``{cycle edge set: antipodally_realized}`` for every cycle
    that some automorphism stabilizes while exchanging its two sides.
    """
    autos = automorphisms(incidence, BOTH)
    antipodal = [_is_antipodal(a) for a in autos]
    results = {}
    n = incidence.n_edges
    for bits in range(1, 1 << n):
        edge_ids = [e for e in range(n) if bits >> e & 1]
        if len(edge_ids) < 2 or not _subset_is_cycle(incidence, edge_ids):
            continue
        cycle = frozenset(edge_ids)
        side_a, side_b = _sides_by_union_find(incidence, cycle)
        qualifying = []
        for i, a in enumerate(autos):
            emap = a.edge_map()
            if {emap[e] for e in cycle} != cycle:
                continue
            fmap = a.face_map()
            if {fmap[f] for f in side_a} == side_b and {fmap[f] for f in side_b} == side_a:
                qualifying.append(i)
        if qualifying:
            results[cycle] = any(antipodal[i] for i in qualifying)
    return results
