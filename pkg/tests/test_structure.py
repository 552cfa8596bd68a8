import json
from fractions import Fraction

import pytest

from framedvoa.codes import BitWord, LinearCode, hamming_h8
from framedvoa.fusion import FramedLabel, Ising, top_weight
from framedvoa.structure import (
    INHERITED_ASSUMPTION,
    OUT_OF_SCOPE,
    LabelAssignmentError,
    VbLabel,
    character_summary,
    dual_pair_verification,
    family_labels,
    module_count_checks,
    ring_isomorphism_to_ising,
    sharp_split,
    twisted_shape,
    vb_fuse,
    vb_fusion_ring,
    vb_top_weights,
    verlinde_certificate,
)


def test_sharp_split_halves():
    assert sharp_split() == {"first0": 64, "first1": 64}


def test_moonshine_labels(moonshine):
    h3 = moonshine.hypothesis3
    assert h3.passed
    assert h3.to_json()["pairs"] == 128 * 128
    assert h3.max_multiplicity == 1 and h3.exactly_one
    assert moonshine.consistent
    for alpha, x in moonshine.labels.items():
        assert top_weight(x).parity == "integral"
        if alpha.bits:
            assert isinstance(x, FramedLabel) and x.alpha == alpha


def test_baby_labels(baby):
    assert baby.condition1.passed and baby.hypothesis3.passed
    assert baby.pair.d.dim == 40 and baby.pair.s.size == 64
    assert INHERITED_ASSUMPTION in baby.assumptions and OUT_OF_SCOPE in baby.assumptions


def test_induced_vb_labels_agree_with_characters(baby, triple50):
    weights = vb_top_weights(triple50)
    assert top_weight(baby.extra_labels["VB0"]).value == weights[VbLabel.VB0] == 0
    assert top_weight(baby.extra_labels["VB1"]).value == weights[VbLabel.VB1] == Fraction(3, 2)
    assert weights[VbLabel.VBT] == Fraction(31, 16)


def test_descriptor_json_is_serialisable(baby):
    data = json.loads(json.dumps(baby.to_json()))
    assert data["dim_S"] == 6 and data["length"] == 47
    assert data["hypothesis3"]["3-iii"] is True


def test_family_labels_reject_bad_weight():
    h8 = hamming_h8()
    with pytest.raises(LabelAssignmentError):
        family_labels(h8, LinearCode(8, (0b11110000,)))


def test_vb_ring_rules():
    assert vb_fuse(VbLabel.VB1, VbLabel.VB1).as_single() is VbLabel.VB0
    assert vb_fuse(VbLabel.VB1, VbLabel.VBT).as_single() is VbLabel.VBT
    ring = vb_fusion_ring()
    assert len(ring.labels) == 3 and ring.is_associative() and ring.is_commutative()


def test_ring_isomorphism_and_verlinde():
    iso = ring_isomorphism_to_ising()
    assert iso.passed and iso.comparisons == 9
    assert iso.mapping[VbLabel.VBT] is Ising.H116
    cert = verlinde_certificate()
    assert cert.passed and cert.entries == 27


def test_module_counts(triple50):
    rep = module_count_checks(triple50)
    assert rep.passed
    assert len(rep.modules) == 4
    assert rep.half_integral == ["W0"]
    assert rep.vb_labels == ["VB0", "VB1", "VBT"]
    assert rep.twisted == [["h12", "VB0"], ["h0", "VB1"], ["h116", "VBT"]]
    assert twisted_shape()[0] == (Ising.H12, VbLabel.VB0)


def test_dual_pair(triple200):
    rep = dual_pair_verification(200, (0.8j, 1j, 1.3j), 1e-6, triple200)
    assert rep.status == "pass"
    assert all(rep.residuals_zero.values())


def test_character_summary(triple50):
    summary = character_summary(50, triple50)
    assert summary["passed"]
    assert summary["j_q1"] == 196884 and summary["t2a_q1"] == 4372
