import random

import pytest

from babyverma.roots import RootSystem, levi_datum, root_label, shape_check


def rs(typ, n):
    return RootSystem(typ, n)


def test_counts():
    assert rs("A", 1).N == 1
    assert rs("A", 2).N == 3
    assert rs("A", 3).N == 6
    assert rs("B", 2).N == 4
    assert rs("B", 3).N == 9
    assert rs("C", 3).N == 9
    assert rs("D", 4).N == 12


def test_rank_bounds():
    with pytest.raises(ValueError):
        rs("B", 1)
    with pytest.raises(ValueError):
        rs("D", 3)
    with pytest.raises(ValueError):
        rs("E", 6)


def test_positive_roots_a2():
    assert set(rs("A", 2).roots) == {(1, 0), (0, 1), (1, 1)}


def test_positive_roots_b2():
    # alpha2 short; the long-string root alpha1 + 2 alpha2 exists
    assert set(rs("B", 2).roots) == {(1, 0), (0, 1), (1, 1), (1, 2)}


def test_positive_roots_c3():
    R = rs("C", 3)
    assert (2, 2, 1) in R.roots  # 2e1, the long root
    assert (0, 2, 1) in R.roots  # 2e2
    assert (1, 2, 1) in R.roots  # e1+e2
    assert (2, 0, 0) not in R.roots


def test_roots_sorted_by_height():
    for t, n in (("A", 3), ("B", 3), ("C", 3), ("D", 4)):
        R = rs(t, n)
        hts = [sum(g) for g in R.roots]
        assert hts == sorted(hts)


def test_all_same_sign():
    for t, n in (("A", 2), ("B", 2), ("C", 3), ("D", 4)):
        for g in rs(t, n).roots:
            assert all(c >= 0 for c in g) and any(c > 0 for c in g)


def test_pairing_examples():
    R = rs("A", 2)
    assert R.pairing((1, 1), (1, 0)) == 1
    assert R.pairing((1, 1), (1, 1)) == 2
    assert R.pairing((0, 0), (1, 1)) == 0
    # negative root
    assert R.pairing((1, 1), (-1, -1)) == -2


def test_pairing_b2_coroots():
    R = rs("B", 2)
    # e1 = a1+a2 is short: coroot weights (2, 1); e1+e2 = a1+2a2 long: (1, 1)
    assert R.coroot_weights[(1, 1)] == (2, 1)
    assert R.coroot_weights[(1, 2)] == (1, 1)


def test_pairing_c3_long_root():
    R = rs("C", 3)
    assert R.coroot_weights[(2, 2, 1)] == (1, 1, 1)


def test_alcove():
    R = rs("A", 2)
    assert R.in_first_dominant_alcove((0, 0), 5)
    assert not R.in_first_dominant_alcove((4, 0), 5)
    assert R.in_first_dominant_alcove((-1, -1), 5)  # all pairings 0


def test_p_regular():
    R = rs("A", 2)
    assert R.is_p_regular((0, 0), 5)
    assert not R.is_p_regular((-1, -1), 5)
    assert not R.is_p_regular((1, 2), 5)  # pairing with a1+a2 is 5


def test_dot_action_identity_and_s1():
    R = rs("A", 2)
    assert R.dot_action([], (3, 1)) == (3, 1)
    assert R.dot_action([1], (0, 0)) == (-2, 1)


def test_dot_action_sigma_orbit_a2():
    # sigma = s1 s2 applied to lam0 with lam0+rho = (1,2)
    R = rs("A", 2)
    lam0 = (0, 1)
    lam1 = R.dot_action([1, 2], lam0)
    lam2 = R.dot_action([1, 2], lam1)
    lam3 = R.dot_action([1, 2], lam2)
    assert tuple(x + 1 for x in lam1) == (-3, 1)
    assert tuple(x + 1 for x in lam2) == (2, -3)
    assert tuple(x + 1 for x in lam3) == (1, 2)


def test_dot_action_sigma_a3():
    R = rs("A", 3)
    lam0 = (0, 1, 2)
    lam1 = R.dot_action([1, 2, 3], lam0)
    assert tuple(x + 1 for x in lam1) == (-6, 1, 2)


def test_dot_action_affine():
    # s_{alpha,1} at p=5 on lam+rho=(1,2) over alpha=a1+a2: pairing 3,
    # shift (3-5)*(1,1) in fundamental coords of a1+a2
    R = rs("A", 2)
    lam = (0, 1)
    out = R.dot_action([((1, 1), 1)], lam, p=5)
    mu = tuple(x + 1 for x in out)
    assert R.pairing(mu, (1, 1)) == 2 * 5 - 3


def test_dot_action_inverse_property():
    random.seed(3)
    for t, n in (("A", 3), ("B", 2), ("C", 3), ("D", 4)):
        R = rs(t, n)
        for _ in range(25):
            word = [random.randrange(1, n + 1) for _ in range(random.randrange(9))]
            lam = tuple(random.randrange(-6, 7) for _ in range(n))
            back = R.dot_action(word, R.dot_action(list(reversed(word)), lam))
            assert back == lam


def test_decompose_weight():
    R = rs("A", 2)
    assert R.decompose_weight((0, 0), 5) == ((0, 0), (0, 0))
    assert R.decompose_weight((5, 0), 5) == ((0, 0), (1, 0))
    assert R.decompose_weight((7, 3), 5) == ((2, 3), (1, 0))
    assert R.decompose_weight((-4, 1), 5) == ((1, 1), (-1, 0))


def test_decompose_bijection():
    random.seed(17)
    R = rs("B", 3)
    for _ in range(1000):
        lam = tuple(random.randrange(-40, 41) for _ in range(3))
        p = random.choice((3, 5, 7))
        lam0, lam1 = R.decompose_weight(lam, p)
        assert all(0 <= c < p for c in lam0)
        assert tuple(a + p * b for a, b in zip(lam0, lam1)) == lam


def test_regular_alcove_weights_a2_p5():
    assert rs("A", 2).regular_alcove_weights(5) == [
        (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0),
    ]


def test_regular_alcove_weights_b2_p5():
    assert rs("B", 2).regular_alcove_weights(5) == [(0, 0), (0, 1)]


def test_regular_alcove_weights_empty_below_coxeter():
    # p smaller than the Coxeter number leaves no regular alcove weight
    assert rs("A", 3).regular_alcove_weights(3) == []
    assert rs("C", 3).regular_alcove_weights(3) == []
    assert rs("D", 4).regular_alcove_weights(3) == []


def test_evector():
    A = rs("A", 2)
    assert A.evector((1, 1)) == (1, 0, -1)
    B = rs("B", 2)
    assert B.evector((1, 1)) == (1, 0)     # e1
    assert B.evector((1, 2)) == (1, 1)     # e1+e2
    C = rs("C", 3)
    assert C.evector((2, 2, 1)) == (2, 0, 0)   # 2e1
    D = rs("D", 4)
    assert D.evector((0, 0, 0, 1)) == (0, 0, 1, 1)   # e3+e4
    assert D.evector((1, 1, 0, 1)) == (1, 0, 0, 1)   # e1+e4
    assert D.evector((1, 1, 1, 1)) == (1, 0, 1, 0)   # e1+e3


def test_levi_datum():
    R = rs("A", 2)
    L = levi_datum(R, [1])
    assert L.J == (2,)
    assert L.levi_roots == ((0, 1),)
    assert set(L.u_roots) == {(1, 0), (1, 1)}
    L0 = levi_datum(R, [])
    assert L0.u_roots == ()
    Lpi = levi_datum(R, [1, 2])
    assert Lpi.levi_roots == ()


def test_shape_check():
    assert shape_check(rs("A", 4), [1, 2])
    assert shape_check(rs("A", 4), [3, 4])
    assert not shape_check(rs("A", 4), [2, 3])
    assert shape_check(rs("B", 3), [2, 3])
    assert not shape_check(rs("B", 3), [1, 2])
    assert shape_check(rs("C", 3), [1])
    assert not shape_check(rs("C", 3), [3])
    assert shape_check(rs("D", 4), [2, 3, 4])
    assert shape_check(rs("D", 4), [1, 2, 3])
    assert not shape_check(rs("D", 4), [3, 4])
    assert not shape_check(rs("D", 4), [4])
    assert shape_check(rs("A", 2), [1, 2])  # full set always passes
    assert not shape_check(rs("A", 2), [])


def test_root_label():
    assert root_label((1, 0)) == "a1"
    assert root_label((1, 2)) == "a1+2a2"
    assert root_label((1, 1, 1)) == "a1+a2+a3"
