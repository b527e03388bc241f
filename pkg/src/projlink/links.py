"""Edge-signed maps, checkerboard structure, and link diagrams.

An edge-signed map ``(G, signs)`` determines a link diagram: the medial of
``G`` is the diagram's shadow, the checkerboard coloring puts the faces
inscribed around vertices of ``G`` on the black side, and the sign of an
edge fixes the over/under choice at the crossing sitting on it by the
left-over-right rule seen from the black regions: on a positive crossing
the over-strand runs from left to right for an observer standing in either
adjacent black region.

PD convention (fixed for all emitted codes): every crossing lists its four
incident arcs counterclockwise starting from the incoming under-strand
arc, components being oriented so that the orbit containing the smallest
dart of each component is followed.  Arc labels are the 0-based medial
edge indices.  With that normalization the over-strand always occupies
positions 1 and 3, and the checkerboard sign of a crossing is ``+``
exactly when the sector counterclockwise-next after an over position is
black.  Swapping the two checkerboard colors negates every sign; a bare PD
code does not record which class is black, so parsers fall back to the
class containing face 0 and callers who care keep the ``black_faces``
field of the JSON form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import ContradictionError, MapError, NotEulerian, TooLarge
from .laurent import Laurent
from .maps import MedialMap, PlanarMap

LOOP_VALUE = Laurent({2: -1, -2: -1})  # value of one extra closed loop

_BLACK = "black"
_WHITE = "white"


@dataclass(frozen=True)
class EdgeSignedMap:
    """A sphere map with a ``+1``/``-1`` sign on every edge."""

    map: PlanarMap
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.signs) != self.map.n_edges:
            raise MapError(
                f"expected {self.map.n_edges} edge signs, got {len(self.signs)}"
            )
        if any(s not in (1, -1) for s in self.signs):
            raise MapError("edge signs must be +1 or -1")

    def negate(self) -> "EdgeSignedMap":
        return EdgeSignedMap(self.map, tuple(-s for s in self.signs))


def is_alternating_signature(g: EdgeSignedMap) -> bool:
    """True iff all edge signs are equal, i.e. the induced diagram alternates."""
    return len(set(g.signs)) == 1


def signed_isomorphic(a: EdgeSignedMap, b: EdgeSignedMap, policy: str = "either"):
    """First isomorphism of the maps that also carries the signs, or ``None``."""
    from .maps import all_isomorphisms

    if a.map.n_edges != b.map.n_edges:
        return None
    for iso in all_isomorphisms(a.map, b.map, policy):
        emap = iso.edge_map()
        if all(b.signs[emap[e]] == a.signs[e] for e in range(a.map.n_edges)):
            return iso
    return None


@dataclass(frozen=True)
class LabeledMedial:
    """Medial map with its face 2-coloring and the lifted vertex signs."""

    medial: MedialMap
    face_colors: tuple[str, ...]
    vertex_signs: tuple[int, ...]
    source: EdgeSignedMap


def checkerboard(m: PlanarMap) -> tuple[str, ...]:
    """Proper black/white coloring of the faces of a 4-regular map.

    A medial map is colored by its face tags (vertex-type faces black).
    Any other 4-regular map gets the proper coloring whose class contains
    face 0; exactly two proper colorings exist.
    """
    if any(len(r) != 4 for r in m.rotations):
        raise NotEulerian("checkerboard coloring needs a 4-regular map")
    if isinstance(m, MedialMap):
        colors = tuple(_BLACK if kind == "vertex" else _WHITE for kind, _ in m.face_kinds)
    else:
        assign: list[str | None] = [None] * m.n_faces
        assign[0] = _BLACK
        queue = [0]
        while queue:
            f = queue.pop()
            want = _WHITE if assign[f] == _BLACK else _BLACK
            for d in m.faces[f]:
                g = m.dart_face[m.pairing[d]]
                if assign[g] is None:
                    assign[g] = want
                    queue.append(g)
        colors = tuple(c if c is not None else _WHITE for c in assign)
    for d, dd in m.edges:
        if colors[m.dart_face[d]] == colors[m.dart_face[dd]]:
            raise ContradictionError("face coloring of an Eulerian sphere map failed")
    return colors


def labeled_medial(g: EdgeSignedMap) -> LabeledMedial:
    """Medial of ``g.map`` with canonical coloring and signs lifted per edge."""
    med = g.map.medial()
    colors = checkerboard(med)
    # Medial vertex i sits on source edge i, so the signs transfer directly.
    return LabeledMedial(med, colors, g.signs, g)


# ---------------------------------------------------------------------------
# Link diagrams (PD codes)
# ---------------------------------------------------------------------------


class LinkDiagram:
    """A link diagram as a tuple of PD crossing entries.

    Each entry lists four arc labels counterclockwise from the incoming
    under-strand arc.  ``components`` is derived by strand tracing unless
    the diagram has no crossings, in which case it must be supplied.
    ``black_faces`` optionally records which shadow faces are black; it is
    carried by diagrams produced from edge-signed maps and by the JSON
    format, but not by bare PD text.
    """

    __slots__ = ("crossings", "components", "black_faces", "shadow")

    def __init__(
        self,
        crossings: Sequence[Sequence[int]],
        components: int | None = None,
        black_faces: frozenset[int] | None = None,
    ):
        entries = tuple(tuple(int(a) for a in entry) for entry in crossings)
        for entry in entries:
            if len(entry) != 4:
                raise MapError(f"PD entry must have 4 arcs, got {entry}")
        counts: dict[int, int] = {}
        for entry in entries:
            for a in entry:
                counts[a] = counts.get(a, 0) + 1
        bad = [a for a, c in counts.items() if c != 2]
        if bad:
            raise MapError(f"arc labels {sorted(bad)} do not occur exactly twice")

        self.crossings = entries
        if not entries:
            if components is None or components < 0:
                raise MapError("a diagram without crossings needs a component count")
            self.components = components
            self.black_faces = None
            self.shadow = None
            return

        slots: dict[int, list[int]] = {}
        for ci, entry in enumerate(entries):
            for j, a in enumerate(entry):
                slots.setdefault(a, []).append(4 * ci + j)
        pairing = [0] * (4 * len(entries))
        for d1, d2 in slots.values():
            pairing[d1] = d2
            pairing[d2] = d1
        rotations = [tuple(range(4 * ci, 4 * ci + 4)) for ci in range(len(entries))]
        self.shadow = PlanarMap(rotations, pairing)

        traced = _strand_orbits(self.shadow)
        self.components = len(traced) // 2
        if components is not None and components != self.components:
            raise MapError(
                f"declared {components} components but tracing found {self.components}"
            )

        if black_faces is not None:
            black_faces = frozenset(int(f) for f in black_faces)
            colors = _face_classes(self.shadow)
            if black_faces not in colors:
                raise MapError("black_faces is not a proper checkerboard class")
        self.black_faces = black_faces

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return (
            self.crossings == other.crossings
            and self.components == other.components
            and self.black_faces == other.black_faces
        )

    def __repr__(self) -> str:
        return f"LinkDiagram({len(self.crossings)} crossings, {self.components} components)"

    def pd_text(self) -> str:
        return ",".join("X[%d,%d,%d,%d]" % entry for entry in self.crossings)

    def to_json_dict(self) -> dict:
        out: dict = {
            "crossings": [list(e) for e in self.crossings],
            "components": self.components,
        }
        out["black_faces"] = sorted(self.black_faces) if self.black_faces is not None else None
        return out


def _strand_orbits(shadow: PlanarMap) -> list[tuple[int, ...]]:
    """Directed strand cycles: leave a crossing by the dart opposite the entry."""
    n = shadow.n_darts
    nxt = [0] * n
    for d in range(n):
        e = shadow.pairing[d]  # arrive at the far crossing
        ci, j = divmod(e, 4)
        nxt[d] = 4 * ci + (j + 2) % 4
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = nxt[d]
        orbits.append(tuple(cyc))
    return orbits


def _face_classes(shadow: PlanarMap) -> tuple[frozenset[int], frozenset[int]]:
    """The two proper checkerboard classes; the first contains face 0."""
    assign: list[int] = [-1] * shadow.n_faces
    assign[0] = 0
    queue = [0]
    while queue:
        f = queue.pop()
        for d in shadow.faces[f]:
            g = shadow.dart_face[shadow.pairing[d]]
            if assign[g] == -1:
                assign[g] = 1 - assign[f]
                queue.append(g)
            elif assign[g] == assign[f]:
                raise ContradictionError("shadow faces are not 2-colorable")
    first = frozenset(f for f, c in enumerate(assign) if c == 0)
    second = frozenset(f for f, c in enumerate(assign) if c == 1)
    return first, second


def component_count(d: LinkDiagram) -> int:
    """Number of closed strands of the diagram."""
    return d.components


def tait_to_diagram(g: EdgeSignedMap) -> LinkDiagram:
    """The link diagram determined by an edge-signed map.

    The shadow is the medial of ``g.map``; crossing ``i`` sits on edge
    ``i`` and its over/under choice follows the edge sign as described in
    the module docstring.
    """
    lm = labeled_medial(g)
    med = lm.medial
    pos_of = {}
    for rot in med.rotations:
        for j, d in enumerate(rot):
            pos_of[d] = j

    def opposite(d: int) -> int:
        rot = med.rotations[med.dart_vertex[d]]
        return rot[(pos_of[d] + 2) % 4]

    nxt = [opposite(med.pairing[d]) for d in range(med.n_darts)]
    seen = [False] * med.n_darts
    chosen: set[int] = set()
    for start in range(med.n_darts):
        if seen[start]:
            continue
        # First unseen dart is the smallest of its component, so this orbit
        # fixes the component's orientation.
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = nxt[d]
        chosen.update(orbit)
        x = opposite(start)  # retire the reversed orbit
        while not seen[x]:
            seen[x] = True
            x = nxt[x]

    entries = []
    start_pos = []
    for ci in range(med.n_vertices):
        rot = med.rotations[ci]
        under = (1, 3) if g.signs[ci] > 0 else (0, 2)
        starts = [p for p in under if rot[(p + 2) % 4] in chosen]
        if len(starts) != 1:
            raise ContradictionError("strand orientation did not single out an entry arc")
        r = starts[0]
        start_pos.append(r)
        entries.append(tuple(rot[(r + j) % 4] // 2 for j in range(4)))

    diagram = LinkDiagram(entries)
    # Transfer the canonical coloring: shadow dart 4*ci+j corresponds to
    # medial dart rot[(r+j) % 4].
    black = set()
    for f, walk in enumerate(diagram.shadow.faces):
        ci, j = divmod(walk[0], 4)
        med_dart = med.rotations[ci][(start_pos[ci] + j) % 4]
        kind, _ = med.face_kinds[med.dart_face[med_dart]]
        if kind == "vertex":
            black.add(f)
    return LinkDiagram(entries, black_faces=frozenset(black))


def diagram_to_tait(d: LinkDiagram, side: str = "black") -> EdgeSignedMap:
    """Checkerboard graph of a diagram with its edge signs.

    ``side="black"`` recovers the graph whose medial is the shadow with
    crossings signed from the black point of view; ``side="white"`` yields
    the other checkerboard graph, which is the dual with all signs
    negated.
    """
    if side not in (_BLACK, _WHITE):
        raise MapError(f"side must be 'black' or 'white', got {side!r}")
    if not d.crossings:
        raise MapError("a diagram without crossings has no checkerboard graph")
    shadow = d.shadow
    first, second = _face_classes(shadow)
    if d.black_faces is not None:
        black = d.black_faces
    else:
        black = first  # canonical fallback for bare PD input
    chosen = black if side == _BLACK else (first | second) - black

    def sector_face(ci: int, j: int) -> int:
        # Sector between rotation positions j and j+1 at crossing ci.
        return shadow.dart_face[4 * ci + (j + 1) % 4]

    # The two chosen sectors at each crossing are opposite; the smaller
    # sector index gets dart 2*ci.
    dart_at: dict[tuple[int, int], int] = {}
    for ci in range(len(d.crossings)):
        secs = [j for j in range(4) if sector_face(ci, j) in chosen]
        if len(secs) != 2 or (secs[0] + 2) % 4 != secs[1]:
            raise ContradictionError("checkerboard sectors at a crossing are not opposite")
        dart_at[(ci, secs[0])] = 2 * ci
        dart_at[(ci, secs[1])] = 2 * ci + 1

    rotations = []
    for f in sorted(chosen):
        walk = shadow.faces[f]
        corners = []
        for x in walk:
            b = shadow.pairing[x]
            ci, j = divmod(b, 4)
            corners.append(dart_at[(ci, j)])
        rotations.append(tuple(reversed(corners)))
    pairing = []
    for ci in range(len(d.crossings)):
        pairing.extend((2 * ci + 1, 2 * ci))

    signs = []
    for ci in range(len(d.crossings)):
        c1 = sector_face(ci, 1) in chosen
        c3 = sector_face(ci, 3) in chosen
        if c1 != c3:
            raise ContradictionError("opposite sectors of a crossing differ in color")
        signs.append(1 if c1 else -1)

    return EdgeSignedMap(PlanarMap(rotations, pairing), tuple(signs))


# ---------------------------------------------------------------------------
# Kauffman bracket
# ---------------------------------------------------------------------------


def kauffman_bracket(d: LinkDiagram, max_crossings: int = 16) -> Laurent:
    """Bracket polynomial by the full state sum over all smoothings.

    Normalization: the unknot has bracket 1 and every further closed loop
    contributes a factor ``-A^2 - A^-2``.  The A-smoothing of a crossing
    joins arc positions (0,1) and (2,3) of its PD entry.
    """
    n = len(d.crossings)
    if n > max_crossings:
        raise TooLarge(f"{n} crossings exceeds the bound {max_crossings}")
    if n == 0:
        return LOOP_VALUE ** (d.components - 1)

    alpha = d.shadow.pairing
    total = Laurent.zero()
    for state in product((0, 1), repeat=n):
        tau = [0] * (4 * n)
        for ci, choice in enumerate(state):
            base = 4 * ci
            if choice == 0:  # A: join (0,1) and (2,3)
                pairs = ((0, 1), (2, 3))
            else:  # B: join (1,2) and (3,0)
                pairs = ((1, 2), (3, 0))
            for p, q in pairs:
                tau[base + p] = base + q
                tau[base + q] = base + p
        seen = [False] * (4 * n)
        orbits = 0
        for start in range(4 * n):
            if seen[start]:
                continue
            orbits += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = tau[alpha[x]]
        loops = orbits // 2
        a_minus_b = n - 2 * sum(state)
        total = total + Laurent.monomial(a_minus_b) * LOOP_VALUE ** (loops - 1)
    return total


def bracket_by_skein(d: LinkDiagram, max_crossings: int = 16) -> Laurent:
    """Bracket polynomial by recursive smoothing; independent oracle.

    Resolves one crossing at a time into explicit arc joins and counts the
    final loops with union-find over arc labels, never consulting the
    shadow map used by :func:`kauffman_bracket`.
    """
    n = len(d.crossings)
    if n > max_crossings:
        raise TooLarge(f"{n} crossings exceeds the bound {max_crossings}")
    if n == 0:
        return LOOP_VALUE ** (d.components - 1)

    labels = sorted({a for entry in d.crossings for a in entry})
    A = Laurent.monomial(1)
    A_inv = Laurent.monomial(-1)

    def loops_of(joins: list[tuple[int, int]]) -> int:
        parent = {a: a for a in labels}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in joins:
            parent[find(a)] = find(b)
        return len({find(a) for a in labels})

    def resolve(idx: int, joins: list[tuple[int, int]]) -> Laurent:
        if idx == n:
            return LOOP_VALUE ** (loops_of(joins) - 1)
        a, b, c, dd = d.crossings[idx]
        took_a = resolve(idx + 1, joins + [(a, b), (c, dd)])
        took_b = resolve(idx + 1, joins + [(b, c), (dd, a)])
        return A * took_a + A_inv * took_b

    return resolve(0, [])


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

_PD_ENTRY = re.compile(r"X\[(\d+),(\d+),(\d+),(\d+)\]")


def parse_pd_text(text: str) -> LinkDiagram:
    """Parse ``X[a,b,c,d],...``; black/white choice is not recorded here."""
    entries = [tuple(int(x) for x in m) for m in _PD_ENTRY.findall(text)]
    leftover = _PD_ENTRY.sub("", text).replace(",", "").strip()
    if not entries or leftover:
        raise MapError("input is not a PD code of the form X[a,b,c,d],...")
    return LinkDiagram(entries)


def diagram_from_json_dict(data: dict) -> LinkDiagram:
    try:
        crossings = data["crossings"]
    except (KeyError, TypeError) as exc:
        raise MapError(f"diagram object needs 'crossings': {exc}")
    black = data.get("black_faces")
    return LinkDiagram(
        crossings,
        components=data.get("components"),
        black_faces=frozenset(black) if black is not None else None,
    )


def gauss_code(d: LinkDiagram) -> list[list[str]]:
    """Unsigned Gauss code, one token list per component.

    Components are ordered by their smallest dart and traversed in the
    orientation used for the PD entries; each token is ``O<i>`` or
    ``U<i>`` for a passage over or under crossing ``i``.
    """
    if not d.crossings:
        return [[] for _ in range(d.components)]
    shadow = d.shadow
    n = shadow.n_darts
    nxt = [0] * n
    for x in range(n):
        e = shadow.pairing[x]
        ci, j = divmod(e, 4)
        nxt[x] = 4 * ci + (j + 2) % 4
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        tokens = []
        x = start
        while not seen[x]:
            seen[x] = True
            ci, j = divmod(x, 4)
            tokens.append(("O" if j % 2 == 1 else "U") + str(ci))
            x = nxt[x]
        out.append(tokens)
        ci, j = divmod(start, 4)
        x = 4 * ci + (j + 2) % 4  # retire the reversed orbit of this strand
        while not seen[x]:
            seen[x] = True
            x = nxt[x]
    return out


def gauss_text(d: LinkDiagram) -> str:
    return " | ".join(" ".join(comp) for comp in gauss_code(d))
