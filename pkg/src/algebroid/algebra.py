"""Finite-dimensional unital associative algebras given by structure constants."""
from .errors import (NotAssociative, UnitLawFails, NotMultiplicative, UnitNotPreserved,
                     SchemaError)
from .exactla import Mat, kernel, to_sparse, to_dense, LinAlgError

HOM = "Homomorphism"
ANTI = "AntiHomomorphism"


class FinAlgebra:
    """Algebra with basis e_0..e_{n-1}; mult[i][j] is the sparse vector of e_i e_j."""

    def __init__(self, F, dim, mult, unit):
        self.F = F
        self.dim = dim
        self.mult = mult
        self.unit = unit
        n = dim
        self._L = [Mat(F, n, n, [mult[i][j] for j in range(n)]) for i in range(n)]
        self._R = [Mat(F, n, n, [mult[j][i] for j in range(n)]) for i in range(n)]

    def __repr__(self):
        return "FinAlgebra(dim=%d over %s)" % (self.dim, self.F.name)

    def __eq__(self, other):
        return (isinstance(other, FinAlgebra) and self.F == other.F and self.dim == other.dim
                and self.mult == other.mult and self.unit == other.unit)

    def __hash__(self):
        return hash((self.dim, self.F))

    def basis(self, i):
        return {i: self.F.one}

    def one(self):
        return dict(self.unit)

    def mul(self, x, y):
        F = self.F
        out = {}
        mult = self.mult
        for i, a in x.items():
            row = mult[i]
            for j, b in y.items():
                F.axpy(out, F.mul(a, b), row[j])
        return out

    def lmul(self, x):
        """Matrix of left multiplication by x."""
        F = self.F
        out = Mat.zero(F, self.dim, self.dim)
        for i, c in x.items():
            out = out + self._L[i].scaled(c)
        return out

    def rmul(self, x):
        F = self.F
        out = Mat.zero(F, self.dim, self.dim)
        for i, c in x.items():
            out = out + self._R[i].scaled(c)
        return out

    def lmul_basis(self, i):
        return self._L[i]

    def rmul_basis(self, i):
        return self._R[i]

    def to_json(self):
        F = self.F
        n = self.dim
        return {"dim": n,
                "unit": [F.to_json(x) for x in to_dense(F, self.unit, n)],
                "mult": [[[F.to_json(x) for x in to_dense(F, self.mult[i][j], n)] for j in range(n)]
                         for i in range(n)]}


def _check_algebra(A):
    F = A.F
    n = A.dim
    mult = A.mult
    for i in range(n):
        ei = {i: F.one}
        if A.mul(A.unit, ei) != ei or A.mul(ei, A.unit) != ei:
            raise UnitLawFails(i)
    for i in range(n):
        for j in range(n):
            eij = mult[i][j]
            for k in range(n):
                lhs = A.mul(eij, {k: F.one})
                rhs = A.mul({i: F.one}, mult[j][k])
                if lhs != rhs:
                    raise NotAssociative(i, j, k)


def mk_algebra(F, dim, mult, unit):
    """Build and verify an algebra; mult[i][j] and unit may be dense lists or sparse dicts."""
    if len(mult) != dim or any(len(r) != dim for r in mult):
        raise LinAlgError("structure constants must be %d x %d" % (dim, dim))
    m = []
    for r in mult:
        row = []
        for v in r:
            if not isinstance(v, dict) and len(v) != dim:
                raise LinAlgError("product vector of wrong length")
            row.append(to_sparse(F, v))
        m.append(row)
    if not isinstance(unit, dict) and len(unit) != dim:
        raise LinAlgError("unit vector of wrong length")
    A = FinAlgebra(F, dim, m, to_sparse(F, unit))
    _check_algebra(A)
    return A


def algebra_from_json(F, data):
    try:
        n = data["dim"]
        return mk_algebra(F, n, [[[F.from_json(x) for x in v] for v in r] for r in data["mult"]],
                          [F.from_json(x) for x in data["unit"]])
    except (KeyError, TypeError) as e:
        raise SchemaError("bad algebra document: %s" % e)


def opposite(A):
    n = A.dim
    return FinAlgebra(A.F, n, [[A.mult[j][i] for j in range(n)] for i in range(n)], dict(A.unit))


def tensor_algebras(A, B):
    """A (x) B with basis index i*dim(B) + k and componentwise product."""
    if A.F != B.F:
        raise LinAlgError("field mismatch")
    F = A.F
    m = B.dim
    n = A.dim * m
    mult = [[None] * n for _ in range(n)]
    for i in range(A.dim):
        for k in range(m):
            for j in range(A.dim):
                for l in range(m):
                    out = {}
                    for a, x in A.mult[i][j].items():
                        for b, y in B.mult[k][l].items():
                            out[a * m + b] = F.mul(x, y)
                    mult[i * m + k][j * m + l] = out
    unit = {}
    for a, x in A.unit.items():
        for b, y in B.unit.items():
            unit[a * m + b] = F.mul(x, y)
    return FinAlgebra(F, n, mult, unit)


def elem_tensor(F, x, y, m):
    """Pure tensor x (x) y with y living in an m-dimensional space."""
    out = {}
    for a, c in x.items():
        for b, d in y.items():
            out[a * m + b] = F.mul(c, d)
    return out


def center(A):
    F = A.F
    n = A.dim
    # z e_i - e_i z = 0 for every i, stacked as one system in z
    cols = []
    for j in range(n):
        col = {}
        for i in range(n):
            d = dict(A.mult[j][i])
            F.axpy(d, F.neg(F.one), A.mult[i][j])
            for k, x in d.items():
                col[i * n + k] = x
        cols.append(col)
    return kernel(Mat(F, n * n, n, cols))


class AlgMap:
    def __init__(self, src, tgt, mat, variance):
        self.src = src
        self.tgt = tgt
        self.mat = mat
        self.variance = variance

    def __call__(self, x):
        return self.mat.apply(x)

    def __repr__(self):
        return "AlgMap(%s, %dx%d)" % (self.variance, self.mat.rows, self.mat.cols)


def check_alg_map(f, src, tgt, variance=HOM):
    if not isinstance(f, Mat):
        f = Mat.from_rows(src.F, f, src.dim)
    if f.rows != tgt.dim or f.cols != src.dim:
        raise LinAlgError("map of shape %dx%d between dims %d and %d" % (f.rows, f.cols, src.dim, tgt.dim))
    if f.apply(src.unit) != tgt.unit:
        raise UnitNotPreserved()
    imgs = [f.col(i) for i in range(src.dim)]
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = f.apply(src.mult[i][j])
            if variance == HOM:
                rhs = tgt.mul(imgs[i], imgs[j])
            elif variance == ANTI:
                rhs = tgt.mul(imgs[j], imgs[i])
            else:
                raise ValueError("variance must be %s or %s" % (HOM, ANTI))
            if lhs != rhs:
                raise NotMultiplicative(i, j)
    return AlgMap(src, tgt, f, variance)


def base_field_algebra(F):
    """The one-dimensional algebra k."""
    return FinAlgebra(F, 1, [[{0: F.one}]], {0: F.one})


def matrix_algebra(F, n):
    """M_n(F) with basis E_ij at index i*n + j."""
    d = n * n
    mult = [[{} for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                mult[i * n + j][j * n + k] = {i * n + k: F.one}
    unit = {i * n + i: F.one for i in range(n)}
    return FinAlgebra(F, d, mult, unit)


def upper_triangular(F, n):
    """UT(n, F): basis E_ij with i <= j, ordered lexicographically."""
    idx = [(i, j) for i in range(n) for j in range(n) if i <= j]
    pos = {p: k for k, p in enumerate(idx)}
    d = len(idx)
    mult = [[{} for _ in range(d)] for _ in range(d)]
    for a, (i, j) in enumerate(idx):
        for b, (k, l) in enumerate(idx):
            if j == k:
                mult[a][b] = {pos[(i, l)]: F.one}
    unit = {pos[(i, i)]: F.one for i in range(n)}
    return FinAlgebra(F, d, mult, unit)


def truncated_polynomials(F, n):
    """F[x]/(x^n) with basis 1, x, ..., x^{n-1}."""
    mult = [[({i + j: F.one} if i + j < n else {}) for j in range(n)] for i in range(n)]
    return FinAlgebra(F, n, mult, {0: F.one})


def group_algebra_cyclic(F, n):
    """F C_n with basis g^0..g^{n-1}."""
    mult = [[{(i + j) % n: F.one} for j in range(n)] for i in range(n)]
    return FinAlgebra(F, n, mult, {0: F.one})
