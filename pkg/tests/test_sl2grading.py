import pytest

from walgebra.ledger import DenominatorLedger
from walgebra.rational import QQ
from walgebra.rootsystem import build_root_system, chevalley_constants
from walgebra.sl2grading import (InvalidLabelsError, build_triple, chi,
                                 grading_from_labels)


def make(type_label, rank, labels):
    lie = chevalley_constants(build_root_system(type_label, rank))
    grading = grading_from_labels(lie, labels)
    ledger = DenominatorLedger()
    triple = build_triple(lie, grading, ledger)
    return lie, grading, triple, ledger


def test_g2_short_root_triple_matches_published_choice():
    lie, grading, triple, ledger = make("G", 2, (1, 0))
    # e = e_{2a1+a2}, h = 2h1 + 3h2, f = e_{-2a1-a2}
    assert triple.e == {lie.index_of_root((2, 1)): QQ(1)}
    assert triple.h == {lie.cartan_index(0): QQ(2), lie.cartan_index(1): QQ(3)}
    assert triple.f == {lie.index_of_root((-2, -1)): QQ(1)}
    assert triple.kappa_ef == 24
    assert ledger.primes == [2, 3]


def test_g2_short_root_grading_dimensions():
    lie, grading, triple, _ = make("G", 2, (1, 0))
    dims = {j: len(grading.piece(j)) for j in sorted(grading.pieces)}
    assert dims == {-3: 2, -2: 1, -1: 2, 0: 4, 1: 2, 2: 1, 3: 2}


def test_sl2_relations_hold_for_all_valid_g2_labels():
    for labels in ((0, 1), (1, 0), (0, 2), (2, 2)):
        lie, grading, triple, _ = make("G", 2, labels)
        two_e = {k: 2 * c for k, c in triple.e.items()}
        assert lie.bracket(triple.h, triple.e) == two_e
        assert lie.bracket(triple.e, triple.f) == triple.h


def test_invalid_labels_rejected():
    lie = chevalley_constants(build_root_system("G", 2))
    for labels in ((1, 1), (2, 1), (1, 2), (2, 0)):
        grading = grading_from_labels(lie, labels)
        with pytest.raises(InvalidLabelsError):
            build_triple(lie, grading)


def test_labels_out_of_range_rejected():
    lie = chevalley_constants(build_root_system("G", 2))
    for labels in ((3, 0), (0, -1), (1,), (1, 0, 0)):
        with pytest.raises(InvalidLabelsError):
            grading_from_labels(lie, labels)


def test_zero_orbit_has_empty_triple():
    lie, grading, triple, _ = make("G", 2, (0, 0))
    assert triple.is_zero
    assert triple.h == {} and triple.f == {}
    assert chi(lie, triple, {0: QQ(5)}) == 0


def test_chi_of_f_is_one():
    """With the normalization (x, y) = kappa(x, y)/kappa(e, f) we get
    chi(f) = 1."""
    for type_label, rank, labels in (("G", 2, (1, 0)), ("G", 2, (0, 1)),
                                     ("A", 1, (2,))):
        lie, grading, triple, _ = make(type_label, rank, labels)
        assert chi(lie, triple, triple.f) == 1


def test_chi_vanishes_off_minus_two_weight_space():
    lie, grading, triple, _ = make("G", 2, (1, 0))
    for j, idxs in grading.pieces.items():
        if j != -2:
            for i in idxs:
                assert chi(lie, triple, {i: QQ(1)}) == 0
