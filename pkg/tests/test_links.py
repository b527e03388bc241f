import pytest

from projlink import (
    EdgeSignedMap,
    LinkDiagram,
    MapError,
    NotEulerian,
    TooLarge,
    bracket_by_skein,
    checkerboard,
    component_count,
    diagram_to_tait,
    gauss_code,
    is_alternating_signature,
    is_isomorphic,
    kauffman_bracket,
    labeled_medial,
    parse_pd_text,
    signed_isomorphic,
    tait_to_diagram,
)
from projlink.laurent import Laurent
from projlink.links import LOOP_VALUE, diagram_from_json_dict, gauss_text

from conftest import digon_map, k4_map, loop_map, triangle_map


def signed(make, signs):
    m = make()
    return EdgeSignedMap(m, signs)


# -- checkerboard and labeled medial ----------------------------------------


def test_checkerboard_medial_triangle(triangle):
    colors = checkerboard(triangle.medial())
    assert sorted(colors).count("black") == 3  # one per vertex
    assert sorted(colors).count("white") == 2


def test_checkerboard_proper(digon):
    med = digon.medial()
    colors = checkerboard(med)
    for d, dd in med.edges:
        assert colors[med.dart_face[d]] != colors[med.dart_face[dd]]


def test_checkerboard_requires_four_regular(k4):
    with pytest.raises(NotEulerian):
        checkerboard(k4)


def test_checkerboard_plain_four_regular():
    # a 4-regular map that is not a MedialMap instance
    med = digon_map().medial()
    from projlink import build_map

    plain = build_map(med.rotations, med.pairing)
    colors = checkerboard(plain)
    assert colors[0] == "black"
    for d, dd in plain.edges:
        assert colors[plain.dart_face[d]] != colors[plain.dart_face[dd]]


def test_labeled_medial_lifts_signs(k4):
    g = EdgeSignedMap(k4, (1,) * 6)
    lm = labeled_medial(g)
    assert lm.vertex_signs == (1,) * 6
    neg = labeled_medial(g.negate())
    assert neg.vertex_signs == (-1,) * 6


def test_labeled_medial_color_convention(digon):
    lm = labeled_medial(EdgeSignedMap(digon, (1, 1)))
    for f, (kind, _) in enumerate(lm.medial.face_kinds):
        assert lm.face_colors[f] == ("black" if kind == "vertex" else "white")


# -- alternating -------------------------------------------------------------


def test_alternating_signature():
    assert is_alternating_signature(signed(k4_map, (1,) * 6))
    assert is_alternating_signature(signed(triangle_map, (-1, -1, -1)))
    assert not is_alternating_signature(signed(digon_map, (1, -1)))


# -- diagrams ----------------------------------------------------------------


def test_hopf_diagram(digon):
    d = tait_to_diagram(EdgeSignedMap(digon, (1, 1)))
    assert len(d.crossings) == 2
    assert component_count(d) == 2


def test_trefoil_diagram(triangle):
    d = tait_to_diagram(EdgeSignedMap(triangle, (1, 1, 1)))
    assert len(d.crossings) == 3
    assert component_count(d) == 1


def test_borromean_diagram(k4):
    d = tait_to_diagram(EdgeSignedMap(k4, (1,) * 6))
    assert len(d.crossings) == 6
    assert component_count(d) == 3


def test_figure_eight_shadow_from_loop():
    d = tait_to_diagram(EdgeSignedMap(loop_map(), (1,)))
    assert len(d.crossings) == 1
    assert component_count(d) == 1
    assert kauffman_bracket(d) in (Laurent({3: -1}), Laurent({-3: -1}))


def test_arc_labels_twice(k4):
    d = tait_to_diagram(EdgeSignedMap(k4, (1,) * 6))
    counts = {}
    for entry in d.crossings:
        for a in entry:
            counts[a] = counts.get(a, 0) + 1
    assert all(c == 2 for c in counts.values())


def test_shadow_is_medial(k4):
    g = EdgeSignedMap(k4, (1,) * 6)
    d = tait_to_diagram(g)
    assert is_isomorphic(d.shadow, k4.medial(), "preserving") is not None


@pytest.mark.parametrize(
    "make,signs",
    [
        (digon_map, (1, 1)),
        (digon_map, (1, -1)),
        (triangle_map, (1, 1, 1)),
        (k4_map, (1,) * 6),
        (k4_map, (1, 1, 1, -1, -1, -1)),
        (loop_map, (1,)),
        (loop_map, (-1,)),
    ],
)
def test_roundtrip_black_and_white(make, signs):
    g = signed(make, signs)
    d = tait_to_diagram(g)

    back = diagram_to_tait(d, "black")
    iso = signed_isomorphic(back, g, "preserving")
    assert iso is not None
    iso.verify()

    # the dual shares edge indices with the primal map, so the white side is
    # the dual carrying the negated signs
    white = diagram_to_tait(d, "white")
    dual_neg = EdgeSignedMap(g.map.dual(), tuple(-s for s in g.signs))
    iso_w = signed_isomorphic(white, dual_neg, "preserving")
    assert iso_w is not None


def test_zero_crossing_diagram():
    unknot = LinkDiagram((), components=1)
    assert kauffman_bracket(unknot) == Laurent.one()
    unlink = LinkDiagram((), components=2)
    assert kauffman_bracket(unlink) == LOOP_VALUE
    with pytest.raises(MapError):
        LinkDiagram(())  # needs a component count
    with pytest.raises(MapError):
        diagram_to_tait(unknot)


# -- bracket -----------------------------------------------------------------


def test_trefoil_bracket_exact(triangle):
    d = tait_to_diagram(EdgeSignedMap(triangle, (1, 1, 1)))
    assert kauffman_bracket(d) in (
        Laurent({5: -1, -3: -1, -7: 1}),
        Laurent({-5: -1, 3: -1, 7: 1}),
    )


@pytest.mark.parametrize(
    "make,signs",
    [
        (digon_map, (1, 1)),
        (triangle_map, (1, 1, 1)),
        (k4_map, (1,) * 6),
        (k4_map, (1, 1, 1, -1, -1, -1)),
        (loop_map, (1,)),
    ],
)
def test_bracket_state_sum_matches_skein(make, signs):
    d = tait_to_diagram(signed(make, signs))
    assert kauffman_bracket(d) == bracket_by_skein(d)


def test_hopf_bracket_differs_from_unlink(digon):
    d = tait_to_diagram(EdgeSignedMap(digon, (1, 1)))
    assert kauffman_bracket(d) != kauffman_bracket(LinkDiagram((), components=2))


def test_sign_flip_mirrors_bracket():
    for make, signs in [
        (digon_map, (1, 1)),
        (triangle_map, (1, 1, 1)),
        (k4_map, (1,) * 6),
    ]:
        g = signed(make, signs)
        b = kauffman_bracket(tait_to_diagram(g))
        b_neg = kauffman_bracket(tait_to_diagram(g.negate()))
        assert b_neg == b.invert_variable()


def test_bracket_too_large(k4):
    d = tait_to_diagram(EdgeSignedMap(k4, (1,) * 6))
    with pytest.raises(TooLarge):
        kauffman_bracket(d, max_crossings=5)
    with pytest.raises(TooLarge):
        bracket_by_skein(d, max_crossings=5)


# -- formats -----------------------------------------------------------------


def test_pd_text_roundtrip(k4):
    d = tait_to_diagram(EdgeSignedMap(k4, (1,) * 6))
    again = parse_pd_text(d.pd_text())
    assert again.crossings == d.crossings
    assert again.components == d.components
    assert again.black_faces is None  # text does not carry the coloring


def test_pd_json_roundtrip(digon):
    d = tait_to_diagram(EdgeSignedMap(digon, (1, -1)))
    again = diagram_from_json_dict(d.to_json_dict())
    assert again == d


def test_pd_parse_errors():
    with pytest.raises(MapError):
        parse_pd_text("not a pd code")
    with pytest.raises(MapError):
        parse_pd_text("X[1,2,3,4]")  # labels do not pair up


def test_parsed_diagram_black_fallback(digon):
    g = EdgeSignedMap(digon, (1, 1))
    d = parse_pd_text(tait_to_diagram(g).pd_text())
    back = diagram_to_tait(d, "black")
    # either checkerboard side of the Hopf diagram is a digon with equal signs
    assert is_isomorphic(back.map, digon) is not None
    assert len(set(back.signs)) == 1


def test_gauss_code_hopf(digon):
    d = tait_to_diagram(EdgeSignedMap(digon, (1, 1)))
    code = gauss_code(d)
    assert len(code) == 2
    for comp in code:
        assert len(comp) == 2  # each strand passes both crossings
    flat = "".join(tok[0] for comp in code for tok in comp)
    assert flat.count("O") == 2 and flat.count("U") == 2
    assert gauss_text(d).count("|") == 1


def test_gauss_code_alternating(k4):
    d = tait_to_diagram(EdgeSignedMap(k4, (1,) * 6))
    for comp in gauss_code(d):
        kinds = [tok[0] for tok in comp]
        assert all(a != b for a, b in zip(kinds, kinds[1:]))
