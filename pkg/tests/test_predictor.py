import pytest

from wedgehom.complex import deletion, independence_complex, link
from wedgehom.errors import InvalidParameterError
from wedgehom.graph import cycle, path, wedge
from wedgehom.grids import STATED_COMPLEX, STATED_DELETION, STATED_LINK, stated_type
from wedgehom.homology import profile_of_type, reduced_homology
from wedgehom.homotopy import EMPTY_SPHERE, POINT, parse_type, sphere, wedge_of_spheres
from wedgehom.predictor import (
    CycleWedgePathParams,
    cycle_wedge_path_deletion,
    cycle_wedge_path_link,
    cycle_wedges_deletion,
    cycle_wedges_link,
    predict_cycle,
    predict_cycle_wedge_path,
    predict_cycle_wedges,
    predict_path,
    predict_path_wedge_path,
    predict_terminal_path_wedge,
    verify,
)


def oracle(g):
    return reduced_homology(independence_complex(g))


def test_paths():
    assert predict_path(0) == EMPTY_SPHERE
    assert predict_path(3) == sphere(0)
    assert predict_path(4) == POINT
    assert predict_path(8) == sphere(2)
    with pytest.raises(InvalidParameterError):
        predict_path(-1)


def test_cycles():
    assert predict_cycle(3) == wedge_of_spheres(0, 0)
    assert predict_cycle(4) == sphere(0)
    assert predict_cycle(7) == sphere(1)
    with pytest.raises(InvalidParameterError):
        predict_cycle(2)


def test_path_wedge_path_examples():
    assert predict_path_wedge_path(3, 4, 1) == sphere(1)
    assert predict_path_wedge_path(3, 7, 4) == sphere(2)
    assert predict_path_wedge_path(2, 5, 3) == POINT
    with pytest.raises(InvalidParameterError):
        predict_path_wedge_path(3, 4, 5)


def test_path_wedge_path_oracle_examples():
    g = wedge([(path(3), 2), (path(7), 3)])
    assert oracle(g) == profile_of_type(sphere(2))
    g = wedge([(path(2), 1), (path(5), 2)])
    assert oracle(g).is_zero


def test_cycle_wedges_examples():
    # oracle values: the link of the wedge point joins I(P_{m-3}) per cycle
    assert predict_cycle_wedges([4, 4]) == sphere(1)
    assert predict_cycle_wedges([3, 5]) == sphere(1)
    assert predict_cycle_wedges([5, 7]) == POINT
    assert predict_cycle_wedges([3, 3]) == wedge_of_spheres(0, 1)
    assert predict_cycle_wedges([6]) == predict_cycle(6)
    with pytest.raises(InvalidParameterError):
        predict_cycle_wedges([4, 2])
    with pytest.raises(InvalidParameterError):
        predict_cycle_wedges([])


ORACLE_PAIRS = {
    (3, 3): {0: 1, 1: 1}, (3, 4): {1: 1}, (3, 5): {1: 1}, (3, 6): {1: 1, 2: 1},
    (3, 7): {2: 1}, (3, 8): {2: 1}, (4, 4): {1: 1}, (4, 5): {}, (4, 6): {2: 1},
    (4, 7): {2: 1}, (4, 8): {}, (5, 5): {2: 1}, (5, 6): {2: 1}, (5, 7): {},
    (5, 8): {3: 1}, (6, 6): {2: 1, 3: 1}, (6, 7): {3: 1}, (6, 8): {3: 1},
    (7, 7): {3: 1}, (7, 8): {}, (8, 8): {4: 1},
}


@pytest.mark.parametrize("pair", sorted(ORACLE_PAIRS))
def test_cycle_pairs_frozen_oracle(pair):
    g = wedge([(cycle(pair[0]), 0), (cycle(pair[1]), 0)])
    assert oracle(g).reduced_betti == ORACLE_PAIRS[pair]
    assert profile_of_type(predict_cycle_wedges(pair)).reduced_betti == ORACLE_PAIRS[pair]


def test_cycle_wedge_parts_match_del_and_lk():
    for ms in [(3, 3), (4, 5), (5, 6), (3, 4, 5)]:
        g = wedge([(cycle(m), 0) for m in ms])
        k = independence_complex(g)
        assert reduced_homology(deletion(k, 0)) == profile_of_type(cycle_wedges_deletion(ms))
        assert reduced_homology(link(k, 0)) == profile_of_type(cycle_wedges_link(ms))


def test_cycle_wedge_path_params():
    p = CycleWedgePathParams(n=7, m=11, k=5)
    assert (p.a, p.b, p.c, p.alpha, p.residues) == (2, 1, 2, 5, (1, 2, 0))
    with pytest.raises(InvalidParameterError):
        CycleWedgePathParams(n=2, m=4, k=1)
    with pytest.raises(InvalidParameterError):
        CycleWedgePathParams(n=4, m=4, k=5)


def test_cycle_wedge_path_examples():
    # n=3a+1, k=3b+1, m-k=3c+1 with a=b=c=1
    assert predict_cycle_wedge_path(CycleWedgePathParams(n=4, m=8, k=4)) == POINT
    assert predict_cycle_wedge_path(CycleWedgePathParams(n=5, m=7, k=3)) == POINT
    # n=3a, k=3b+1, m-k=3c+2 with a=b=c=1: alpha=3, oracle gives S^3 alone
    p = CycleWedgePathParams(n=3, m=9, k=4)
    assert predict_cycle_wedge_path(p) == sphere(3)
    assert oracle(wedge([(cycle(3), 0), (path(9), 3)])) == profile_of_type(sphere(3))


def test_cycle_wedge_path_parts_match_oracle():
    for n in range(3, 8):
        for m in range(1, 8):
            for k in range(1, m + 1):
                p = CycleWedgePathParams(n=n, m=m, k=k)
                g = wedge([(cycle(n), 0), (path(m), k - 1)])
                kx = independence_complex(g)
                assert reduced_homology(deletion(kx, 0)) == profile_of_type(cycle_wedge_path_deletion(p))
                assert reduced_homology(link(kx, 0)) == profile_of_type(cycle_wedge_path_link(p))
                assert reduced_homology(kx) == profile_of_type(predict_cycle_wedge_path(p))


def test_reflection_symmetry_of_cycle_wedge_path():
    for n in range(3, 10):
        for m in range(1, 12):
            for k in range(1, m + 1):
                a = predict_cycle_wedge_path(CycleWedgePathParams(n=n, m=m, k=k))
                b = predict_cycle_wedge_path(CycleWedgePathParams(n=n, m=m, k=m + 1 - k))
                assert a == b


def test_stated_grids_lookup():
    p = CycleWedgePathParams(n=6, m=12, k=7)  # residues (0, 1, 2), alpha 5
    assert stated_type(STATED_COMPLEX, p) == wedge_of_spheres(5, 6)
    assert stated_type(STATED_DELETION, p) == sphere(5)
    assert stated_type(STATED_LINK, p) == sphere(5)
    assert len(STATED_COMPLEX) == 27


def test_terminal_examples():
    r = predict_terminal_path_wedge([4, 4])
    assert r.case_formula == POINT and not r.discrepancy
    r = predict_terminal_path_wedge([5, 5])
    assert r.case_formula == sphere(2) and not r.discrepancy
    r = predict_terminal_path_wedge([4, 5])
    assert r.case_formula == sphere(1) and r.fold_answer == sphere(2) and r.discrepancy
    assert r.fold_answer == predict_path(8)
    with pytest.raises(InvalidParameterError):
        predict_terminal_path_wedge([5])


def test_terminal_zero_arm():
    # (I(P_2))^{*2} * I(P_3) * I(P_4): contractible because of the P_4 factor
    assert predict_terminal_path_wedge([6, 4, 5]).fold_answer == POINT
    # S^0 * S^0 from the first arm, then I(P_3) * I(P_5) = S^0 * S^1
    r = predict_terminal_path_wedge([6, 4, 6])
    assert r.fold_answer == r.case_formula == parse_type("S^4")
    g = wedge([(path(6), 5), (path(4), 3), (path(6), 5)])
    assert oracle(g) == profile_of_type(sphere(4))


def test_verify_reports():
    g = wedge([(cycle(4), 0), (cycle(4), 0)])
    assert verify(g, sphere(1)).match
    bad = verify(g, wedge_of_spheres(1, 2))
    assert not bad.match and bad.mismatched_dimensions == (2,)
    assert verify(path(4), POINT, check_collapse=True).collapse
    neg = verify(path(5), POINT)
    assert not neg.match and neg.mismatched_dimensions == (1,)
    with pytest.raises(InvalidParameterError):
        verify(path(3), parse_type("unknown"))
