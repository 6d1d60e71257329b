import json

import pytest

import thickrep


def test_characters():
    assert thickrep.exterior_square_decomposition([3, 2]) == [([3, 1, 1], 1), ([2, 1, 1, 1], 1)]
    assert thickrep.character([2, 1]) == {"(3)": "-1", "(2,1)": "0", "(1,1,1)": "2"}
    assert all(thickrep.gl2_wedge_identity(a, b) for a in range(9) for b in range(-3, 4))
    assert thickrep.distinct_parts_coeffs(3) == [1, 1, 1, 2, 1, 1, 1]
    assert thickrep.plethysm_component_count("sym2", 3, 3) == 2
    with pytest.raises(thickrep.ThickrepError):
        thickrep.character([1, 2])


def test_block_representation_is_refuted_with_a_certificate():
    blk = thickrep.block(2, 2)
    rep = blk["representation"]
    assert rep["field"] == {"kind": "Fp", "p": 13}
    assert thickrep.burnside_dim(rep) == 16

    report = thickrep.check_thick(rep, 2)
    assert report["verdict"] == "NotThick"
    assert report["certificate"]["w1"] == blk["w"]
    ok, problems = thickrep.recheck(report)
    assert ok and problems == []

    assert thickrep.check_thick(rep, 1, method="definition")["verdict"] == "Thick"
    assert thickrep.check_thick(rep, 2, method="definition", caps="points=10")["verdict"] == "Unknown"


def test_companion_and_exterior():
    comp = thickrep.companion("Q", 4, 2, 3)
    assert [len(w["subspace"]["basis"]) for w in comp["windows"]] == [4, 4, 4]
    wedge = thickrep.exterior(comp, 2)
    assert wedge["dim"] == 6
    assert json.loads(json.dumps(wedge)) == wedge


def test_lie_and_symplectic():
    sp4 = thickrep.lie("sp", 2)
    assert thickrep.check_thick(sp4, 2)["verdict"] == "Thick"
    assert thickrep.is_dense(sp4, 2) == "No"
    so5 = thickrep.lie("so_split", 5)
    assert thickrep.is_dense(so5, 2, absolute=True) == "Yes"
    assert thickrep.ker_fm_dim(3, 3) == 14
    assert thickrep.r_number_bounds(6, 2) == (3, 6, 3)
    assert thickrep.r_number_bounds(7, 3)[2] is None


def test_bad_input_raises():
    with pytest.raises(thickrep.ThickrepError):
        thickrep.check_thick({"field": {"kind": "Q"}, "dim": 2, "mode": "group", "generators": []}, 5)
    with pytest.raises(thickrep.ThickrepError):
        thickrep.check_thick("{not json", 1)


def test_verify_filter():
    suite = thickrep.verify("characters")
    assert [item["id"] for item in suite["items"]] == [1, 2, 3]
    assert suite["overall"] == "Verified"
