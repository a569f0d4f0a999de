import pytest

from algebroid.errors import DoesNotDescend, RangesDoNotCommute
from algebroid.exactla import QQ, Mat
from algebroid.algebra import matrix_algebra, upper_triangular
from algebroid.bimodtensor import (balanced_tensor, tensor_from_actions, iterated_tensor, descend_map,
                                   intertwiner, LOWER_LEFT, UPPER_RIGHT, check_ranges_commute)


def test_matrix_algebra_over_itself():
    A = matrix_algebra(QQ, 2)
    acts_r = [A.rmul({b: QQ.one}) for b in range(4)]
    acts_l = [A.lmul({b: QQ.one}) for b in range(4)]
    Q = tensor_from_actions(A, acts_r, acts_l)
    assert Q.dim == 4      # M2 (x)_{M2} M2 = M2


def test_over_field_is_plain_tensor():
    A = upper_triangular(QQ, 2)
    one = Mat(QQ, 3, 1, [dict(A.unit)])
    Q = balanced_tensor(A, one, one, UPPER_RIGHT, LOWER_LEFT)
    assert Q.dim == 9


def test_proj_sect():
    A = matrix_algebra(QQ, 2)
    Q = tensor_from_actions(A, [A.rmul({b: QQ.one}) for b in range(4)], [A.lmul({b: QQ.one}) for b in range(4)])
    for i in range(Q.dim):
        e = {i: QQ.one}
        assert Q.proj_vec(Q.sect_vec(e)) == e
    for r in Q.kernel_span():
        assert Q.proj_vec(r) == {}


def test_brackets_agree():
    A = matrix_algebra(QQ, 2)
    link = ([A.rmul({b: QQ.one}) for b in range(4)], [A.lmul({b: QQ.one}) for b in range(4)])
    Ql = iterated_tensor(A, [link, link], "left")
    Qr = iterated_tensor(A, [link, link], "right")
    assert Ql.dim == Qr.dim == 4
    M = intertwiner(Ql, Qr)
    assert M.rank() == 4


def test_descend_failure():
    A = matrix_algebra(QQ, 2)
    Q = tensor_from_actions(A, [A.rmul({b: QQ.one}) for b in range(4)], [A.lmul({b: QQ.one}) for b in range(4)])
    # swapping the factors does not respect x.b (x) y = x (x) b.y
    n = 4
    swap = lambda v: {(k % n) * n + k // n: c for k, c in v.items()}
    with pytest.raises(DoesNotDescend):
        descend_map(swap, Q, Q)


def test_ranges_must_commute():
    A = matrix_algebra(QQ, 2)
    s = Mat(QQ, 4, 2, [{0: QQ.one}, {1: QQ.one}])
    with pytest.raises(RangesDoNotCommute):
        check_ranges_commute(A, s, s)
