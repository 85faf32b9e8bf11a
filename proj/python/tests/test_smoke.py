import khtensor


def test_dimensions():
    assert khtensor.algebra_dim(2, 1) == 5
    assert khtensor.algebra_dim(3, 1) == 14


def test_relations():
    checked, failures = khtensor.verify_relations(3, 1, field="2")
    assert checked > 0
    assert failures == []


def test_pairing_matches_hom_dims():
    dims = khtensor.hom_dims(2, 1)
    for (a, b), graded in dims.items():
        assert khtensor.pairing(a, b, 1) == {d: n for d, n in graded.items() if n}


def test_trefoil_both_engines():
    expected = {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}
    assert khtensor.kh([1, 1, 1], engine="cube") == expected
    assert khtensor.kh([1, 1, 1], engine="functor") == expected
    assert khtensor.kh([1, 1, 1], field="2") == khtensor.kh([1, 1, 1], engine="functor", field="2")


def test_jones_and_projector():
    assert khtensor.jones([1, 1, 1]) == {1: 1, 3: 1, 5: 1, 9: -1}
    assert khtensor.jw_coefficients(2, 1, 5)[(0, 1)] == {1: 1, 3: -1, 5: 1}
