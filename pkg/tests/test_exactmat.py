"""Matrix layer tests.

brute_force_det (the signed permutation sum) is the determinant oracle; the
polynomial paths are additionally cross-checked through evaluation at random
integer points, which must commute with matmul and det.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

import pytest

from minordet.exactmat import (
    BRUTE_FORCE_CAP,
    IndexSet,
    MatrixExpr,
    adjugate,
    brute_force_det,
    det_bareiss,
    det_laplace,
    evaluate_matrix,
    k_subsets,
    matmul,
    matrix_from_text,
    matrix_to_text,
    remove_rc,
    submatrix,
)
from minordet.polyring import Polynomial, VariableUniverse


def _rand_int_matrix(rng, n, m, bound=9):
    return MatrixExpr(n, m, [rng.randint(-bound, bound) for _ in range(n * m)])


def _generic(n, letter="m"):
    names = [f"{letter}_{i}_{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    u = VariableUniverse(names)
    ent = [Polynomial.variable(u, nm) for nm in names]
    return MatrixExpr(n, n, ent, u), u


def test_index_set_validation():
    s = IndexSet((1, 3), 4)
    assert list(s) == [1, 3]
    assert len(s) == 2
    assert 3 in s and 2 not in s
    with pytest.raises(ValueError):
        IndexSet((3, 1), 4)
    with pytest.raises(ValueError):
        IndexSet((1, 1), 4)
    with pytest.raises(ValueError):
        IndexSet((0,), 4)
    with pytest.raises(ValueError):
        IndexSet((5,), 4)
    assert IndexSet((), 0).elements == ()


def test_index_set_plus_and_complement():
    s = IndexSet((1, 3), 4)
    sp = s.plus()
    assert sp.elements == (1, 3, 5) and sp.ground == 5
    assert s.complement().elements == (2, 4)
    assert IndexSet((), 3).complement().elements == (1, 2, 3)
    assert IndexSet((), 0).plus().elements == (1,)


def test_k_subsets_counts_and_order():
    for n in range(7):
        for k in range(n + 1):
            fam = k_subsets(n, k)
            assert fam.size == math.comb(n, k)
            elems = [m.elements for m in fam]
            assert elems == sorted(elems)  # lexicographic enumeration
            assert elems == list(combinations(range(1, n + 1), k))
            for i, m in enumerate(fam):
                assert fam.index_of(m) == i
                assert fam.index_of(m.elements) == i
    with pytest.raises(ValueError):
        k_subsets(3, 4)
    with pytest.raises(ValueError):
        k_subsets(-1, 0)
    with pytest.raises(ValueError):
        k_subsets(3, 2).index_of((1, 4))


def test_matrix_construction_and_entry():
    a = MatrixExpr.from_rows([[1, 2], [3, 4]])
    assert a.rows == 2 and a.cols == 2 and a.universe is None
    assert a.entry(1, 2) == 2 and a.entry(2, 1) == 3
    with pytest.raises(ValueError):
        a.entry(0, 1)
    with pytest.raises(ValueError):
        a.entry(1, 3)
    with pytest.raises(ValueError):
        MatrixExpr(2, 2, [1, 2, 3])
    with pytest.raises(ValueError):
        MatrixExpr(-1, 2, [])
    with pytest.raises(ValueError):
        MatrixExpr.from_rows([[1, 2], [3]])
    z = MatrixExpr(0, 3, [])
    assert z.row_list() == []


def test_entry_kind_promotion_rules():
    u = VariableUniverse(["x"])
    x = Polynomial.variable(u, "x")
    a = MatrixExpr.from_rows([[x, 1], [0, x]])
    assert all(isinstance(e, Polynomial) for e in a.entries)
    assert a.entry(1, 2) == Polynomial.one(u)
    with pytest.raises(ValueError):
        MatrixExpr.from_rows([[x, 2]])
    # explicit universe turns an all-literal matrix polynomial
    b = MatrixExpr.from_rows([[1, 0]], universe=u)
    assert b.universe is u and isinstance(b.entry(1, 1), Polynomial)
    other = VariableUniverse(["y"])
    with pytest.raises(ValueError):
        MatrixExpr.from_rows([[x, Polynomial.variable(other, "y")]])


def test_transpose_and_submatrix():
    a = MatrixExpr.from_rows([[1, 2, 3], [4, 5, 6]])
    t = a.transpose()
    assert t.rows == 3 and t.cols == 2
    assert t.row_list() == [[1, 4], [2, 5], [3, 6]]
    s = submatrix(a, (1, 2), (1, 3))
    assert s.row_list() == [[1, 3], [4, 6]]
    s2 = submatrix(a, IndexSet((2,), 2), IndexSet((2,), 3))
    assert s2.row_list() == [[5]]
    with pytest.raises(ValueError):
        submatrix(a, (2, 1), (1,))
    with pytest.raises(ValueError):
        submatrix(a, (1,), (4,))
    empty = submatrix(a, (), ())
    assert empty.rows == 0 and empty.cols == 0


def test_remove_rc_is_complement_submatrix():
    rng = random.Random(200)
    a = _rand_int_matrix(rng, 4, 5)
    for i in range(1, 5):
        for j in range(1, 6):
            direct = remove_rc(a, i, j)
            via = submatrix(
                a,
                IndexSet((i,), 4).complement(),
                IndexSet((j,), 5).complement(),
            )
            assert direct == via
    with pytest.raises(ValueError):
        remove_rc(a, 5, 1)


def test_matmul_int_against_naive():
    rng = random.Random(201)
    for _ in range(40):
        n, p, m = rng.randint(0, 4), rng.randint(0, 4), rng.randint(0, 4)
        a = _rand_int_matrix(rng, n, p)
        b = _rand_int_matrix(rng, p, m)
        prod = a @ b
        assert prod.rows == n and prod.cols == m
        for i in range(1, n + 1):
            for j in range(1, m + 1):
                want = sum(a.entry(i, t) * b.entry(t, j) for t in range(1, p + 1))
                assert prod.entry(i, j) == want
    with pytest.raises(ValueError):
        _rand_int_matrix(rng, 2, 3) @ _rand_int_matrix(rng, 2, 3)


def test_matmul_identity_and_kind_mixing():
    rng = random.Random(202)
    a = _rand_int_matrix(rng, 3, 3)
    assert a @ MatrixExpr.identity(3) == a
    assert MatrixExpr.identity(3) @ a == a
    g, _ = _generic(2)
    with pytest.raises(ValueError):
        g @ a


def test_matmul_poly_commutes_with_evaluation():
    rng = random.Random(203)
    g, u = _generic(3)
    h = g.transpose()
    prod = g @ h
    for _ in range(10):
        pt = {name: rng.randint(-4, 4) for name in u.names}
        left = evaluate_matrix(prod, pt)
        right = evaluate_matrix(g, pt) @ evaluate_matrix(h, pt)
        assert left == right


def test_det_known_values():
    assert det_laplace(MatrixExpr(0, 0, [])) == 1
    assert det_bareiss(MatrixExpr(0, 0, [])) == 1
    assert brute_force_det(MatrixExpr(0, 0, [])) == 1
    assert det_laplace(MatrixExpr.from_rows([[7]])) == 7
    assert det_laplace(MatrixExpr.from_rows([[1, 2], [3, 4]])) == -2
    assert det_bareiss(MatrixExpr.from_rows([[1, 2], [3, 4]])) == -2
    vander = MatrixExpr.from_rows([[1, 1, 1], [2, 3, 5], [4, 9, 25]])
    # Vandermonde on 2, 3, 5: (3-2)(5-2)(5-3) = 6
    assert det_laplace(vander) == 6
    assert det_bareiss(vander) == 6
    assert brute_force_det(vander) == 6
    assert det_laplace(MatrixExpr.identity(5)) == 1
    with pytest.raises(ValueError):
        det_laplace(MatrixExpr(2, 3, [0] * 6))


def test_det_three_way_agreement_random():
    rng = random.Random(204)
    for _ in range(120):
        n = rng.randint(0, 5)
        a = _rand_int_matrix(rng, n, n)
        reference = brute_force_det(a)
        assert det_laplace(a) == reference
        assert det_bareiss(a) == reference


def test_det_multiplicative_and_transpose_invariant():
    rng = random.Random(205)
    for _ in range(60):
        n = rng.randint(1, 4)
        a = _rand_int_matrix(rng, n, n)
        b = _rand_int_matrix(rng, n, n)
        assert det_bareiss(a @ b) == det_bareiss(a) * det_bareiss(b)
        assert det_bareiss(a.transpose()) == det_bareiss(a)


def test_det_bareiss_pivoting_paths():
    # zero leading pivot forces a row swap
    a = MatrixExpr.from_rows([[0, 1, 2], [3, 0, 1], [1, 1, 0]])
    assert det_bareiss(a) == brute_force_det(a)
    perm = MatrixExpr.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert det_bareiss(perm) == 1
    swap = MatrixExpr.from_rows([[0, 1], [1, 0]])
    assert det_bareiss(swap) == -1
    # structurally singular: no pivot available in the first column block
    sing = MatrixExpr.from_rows([[0, 5, 7], [0, 1, 2], [0, 3, 4]])
    assert det_bareiss(sing) == 0
    dup = MatrixExpr.from_rows([[1, 2, 3], [1, 2, 3], [4, 5, 6]])
    assert det_bareiss(dup) == 0
    assert det_laplace(dup) == 0


def test_det_bareiss_rejects_polynomials():
    g, _ = _generic(2)
    with pytest.raises(TypeError):
        det_bareiss(g)


def test_brute_force_cap():
    big = MatrixExpr.identity(BRUTE_FORCE_CAP + 1)
    with pytest.raises(ValueError):
        brute_force_det(big)


def test_det_poly_against_permutation_sum():
    for n in range(4):
        g, _ = _generic(n)
        assert det_laplace(g) == brute_force_det(g)


def test_det_poly_commutes_with_evaluation():
    rng = random.Random(206)
    g, u = _generic(4)
    d = det_laplace(g)
    for _ in range(20):
        pt = {name: rng.randint(-6, 6) for name in u.names}
        assert d.evaluate(pt) == det_bareiss(evaluate_matrix(g, pt))


def test_adjugate_identity_int():
    rng = random.Random(207)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = _rand_int_matrix(rng, n, n)
        d = det_laplace(a)
        prod = a @ adjugate(a)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert prod.entry(i, j) == (d if i == j else 0)
    assert adjugate(MatrixExpr.from_rows([[9]])).entry(1, 1) == 1


def test_adjugate_identity_poly():
    g, u = _generic(3)
    d = det_laplace(g)
    prod = g @ adjugate(g)
    for i in range(1, 4):
        for j in range(1, 4):
            assert prod.entry(i, j) == (d if i == j else Polynomial.zero(u))


def test_evaluate_matrix_requires_poly_kind():
    a = MatrixExpr.identity(2)
    with pytest.raises(TypeError):
        evaluate_matrix(a, {})


def test_matrix_text_roundtrip_int():
    rng = random.Random(208)
    for _ in range(30):
        n, m = rng.randint(0, 4), rng.randint(0, 4)
        a = _rand_int_matrix(rng, n, m, bound=50)
        text = matrix_to_text(a)
        assert text.splitlines()[0] == f"{n} {m} int"
        back = matrix_from_text(text)
        assert back == a and back.universe is None


def test_matrix_text_roundtrip_poly():
    g, u = _generic(2)
    a = MatrixExpr.from_rows(
        [[g.entry(1, 1) * 3 - 1, Polynomial.zero(u)], [g.entry(2, 1) ** 2, g.entry(1, 2) + 5]],
        universe=u,
    )
    text = matrix_to_text(a)
    assert text.splitlines()[0] == "2 2 poly"
    assert " " not in text.splitlines()[1].split(" ")[0]  # glued terms
    back = matrix_from_text(text, u)
    assert back == a


def test_matrix_text_rejects_malformed():
    with pytest.raises(ValueError):
        matrix_from_text("")
    with pytest.raises(ValueError):
        matrix_from_text("2 2 float\n1 2\n3 4\n")
    with pytest.raises(ValueError):
        matrix_from_text("2 2 int\n1 2\n")
    with pytest.raises(ValueError):
        matrix_from_text("1 2 int\n1 2 3\n")
    with pytest.raises(ValueError):
        matrix_from_text("1 1 poly\n+1*x\n")  # no universe given


def test_matrix_text_zero_dimensions():
    for mat in (MatrixExpr(0, 0, []), MatrixExpr(0, 3, []), MatrixExpr(3, 0, [])):
        assert matrix_from_text(matrix_to_text(mat)) == mat
