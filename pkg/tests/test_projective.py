import math

import pytest

from projlink import (
    ContradictionError,
    EdgeSignedMap,
    NotAntipodallySelfDual,
    NotAWitness,
    NotProjective,
    antipodal_inversion_residual,
    antipodal_involutions,
    check_projective,
    classify_witness,
    duality_color_reversal,
    labeled_medial,
    max_residual_over_sample,
    nonalternating_criterion,
)
from projlink.projective import (
    FORCES_NONALTERNATING,
    INCONCLUSIVE,
    INFINITY,
    invert_point,
    stereographic,
)


def test_hopf_accepted(hopf_signed):
    report = check_projective(hopf_signed)
    assert report.medial_antipodal
    assert report.projective
    w, cls = report.witnesses[report.accepting_witness]
    assert (cls.color, cls.sign) == ("preserving", "preserving")


def test_borromean_rejected(borromean_signed):
    report = check_projective(borromean_signed)
    assert report.medial_antipodal
    assert not report.projective
    assert report.witnesses
    for _, cls in report.witnesses:
        assert (cls.color, cls.sign) == ("reversing", "preserving")


def test_trefoil_rejected_no_witness(trefoil_signed):
    report = check_projective(trefoil_signed)
    assert not report.medial_antipodal
    assert not report.projective
    assert report.witnesses == ()
    # five faces of the medial rule a witness out
    assert trefoil_signed.map.medial().n_faces == 5


def test_k4_mixed_accepted_reversing(k4_mixed_signed):
    report = check_projective(k4_mixed_signed)
    assert report.projective
    _, cls = report.witnesses[report.accepting_witness]
    assert (cls.color, cls.sign) == ("reversing", "reversing")


def test_acceptance_invariant_under_global_sign_flip(
    hopf_signed, trefoil_signed, borromean_signed, k4_mixed_signed
):
    for g in (hopf_signed, trefoil_signed, borromean_signed, k4_mixed_signed):
        assert check_projective(g).projective == check_projective(g.negate()).projective


def test_classification_color_never_neither(
    hopf_signed, borromean_signed, k4_mixed_signed
):
    for g in (hopf_signed, borromean_signed, k4_mixed_signed):
        lm = labeled_medial(g)
        for w in antipodal_involutions(lm.medial):
            cls = classify_witness(lm, w)
            assert cls.color in ("preserving", "reversing")


def test_constant_signs_accept_only_preserving(hopf_signed):
    report = check_projective(hopf_signed)
    for _, cls in report.witnesses:
        if cls.accepting():
            assert (cls.color, cls.sign) == ("preserving", "preserving")


def test_classify_rejects_foreign_witness(hopf_signed, borromean_signed):
    lm_hopf = labeled_medial(hopf_signed)
    lm_borr = labeled_medial(borromean_signed)
    w = antipodal_involutions(lm_borr.medial)[0]
    with pytest.raises(NotAWitness):
        classify_witness(lm_hopf, w)


def test_duality_color_reversal(k4, digon):
    assert duality_color_reversal(k4) is True
    with pytest.raises(NotAntipodallySelfDual):
        duality_color_reversal(digon)


def test_nonalternating_criterion_hopf(hopf_signed):
    report = check_projective(hopf_signed)
    assert nonalternating_criterion(hopf_signed, report) == INCONCLUSIVE


def test_nonalternating_criterion_k4_mixed(k4_mixed_signed):
    report = check_projective(k4_mixed_signed)
    verdict = nonalternating_criterion(k4_mixed_signed, report)
    assert verdict == FORCES_NONALTERNATING
    assert len(set(k4_mixed_signed.signs)) > 1


def test_nonalternating_requires_projective(borromean_signed):
    report = check_projective(borromean_signed)
    with pytest.raises(NotProjective):
        nonalternating_criterion(borromean_signed, report)


# -- inversion identity ------------------------------------------------------


def test_equator_point_exact():
    assert antipodal_inversion_residual((0.0, 1.0, 0.0, 0.0)) == 0.0


def test_pole_cases():
    # south pole: finite zero meets inverted infinity
    assert antipodal_inversion_residual((0.0, 0.0, 0.0, -1.0)) == 0.0
    # north pole: projection is infinite on both sides
    assert antipodal_inversion_residual((0.0, 0.0, 0.0, 1.0)) == 0.0


def test_stereographic_conventions():
    assert stereographic((0.0, 0.0, 0.0, 1.0)) == INFINITY
    assert invert_point((0.0, 0.0, 0.0)) == INFINITY
    assert invert_point(INFINITY) == (0.0, 0.0, 0.0)
    v = invert_point((2.0, 0.0, 0.0))
    assert math.isclose(v[0], 0.5)


def test_non_unit_input_rejected():
    with pytest.raises(ValueError):
        antipodal_inversion_residual((1.0, 1.0, 0.0, 0.0))


def test_residual_sample():
    assert max_residual_over_sample(1000, seed=0) < 1e-12


def test_residual_sample_deterministic():
    a = max_residual_over_sample(200, seed=42)
    b = max_residual_over_sample(200, seed=42)
    assert a == b
