"""Exact linear algebra over Q and F_p.

Vectors are sparse dicts {index: nonzero scalar}.  Matrices are stored by
columns (a linear map V -> W is a dim W x dim V matrix acting on column
coordinate vectors), which makes applying a map to a sparse vector cheap.
Rationals are gmpy2.mpq, F_p scalars are Python ints in [0, p).
"""
from gmpy2 import mpq, is_prime


class LinAlgError(ValueError):
    pass


class Field:
    """Base class; use QQ or PrimeField(p)."""

    p = 0

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("field", self.p))

    def __repr__(self):
        return self.name


class Rationals(Field):
    name = "Q"
    p = 0

    def __call__(self, x):
        if isinstance(x, str):
            return mpq(x.strip())
        return mpq(x)

    zero = mpq(0)
    one = mpq(1)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def to_json(self, x):
        return str(mpq(x))

    def from_json(self, v):
        if isinstance(v, bool):
            raise LinAlgError("bad rational %r" % (v,))
        if isinstance(v, int):
            return mpq(v)
        if isinstance(v, str):
            try:
                return mpq(v)
            except ValueError:
                raise LinAlgError("bad rational %r" % (v,))
        raise LinAlgError("bad rational %r" % (v,))

    def elements(self, count):
        """First `count` distinct field elements 0, 1, -1, 2, -2, ..."""
        out = [mpq(0)]
        k = 1
        while len(out) < count:
            out.append(mpq(k))
            if len(out) < count:
                out.append(mpq(-k))
            k += 1
        return out[:count]

    def size(self):
        return None

    # vector kernels
    def axpy(self, y, c, x):
        """y += c*x in place."""
        for k, v in x.items():
            w = y.get(k)
            if w is None:
                y[k] = c * v
            else:
                w = w + c * v
                if w:
                    y[k] = w
                else:
                    del y[k]

    def scale(self, c, x):
        if not c:
            return {}
        return {k: c * v for k, v in x.items()}


QQ = Rationals()


class PrimeField(Field):
    def __init__(self, p):
        p = int(p)
        if p < 2 or not is_prime(p):
            raise LinAlgError("%d is not prime" % p)
        self.p = p
        self.name = "GF(%d)" % p
        self.zero = 0
        self.one = 1

    def __call__(self, x):
        if isinstance(x, str):
            x = mpq(x.strip())
        if isinstance(x, int):
            return x % self.p
        x = mpq(x)
        return (int(x.numerator) * pow(int(x.denominator), -1, self.p)) % self.p

    def inv(self, x):
        if not x % self.p:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def neg(self, x):
        return (-x) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def to_json(self, x):
        return int(x) % self.p

    def from_json(self, v):
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.p:
            raise LinAlgError("bad GF(%d) scalar %r" % (self.p, v))
        return v

    def elements(self, count):
        return list(range(min(count, self.p)))

    def size(self):
        return self.p

    def axpy(self, y, c, x):
        p = self.p
        for k, v in x.items():
            w = (y.get(k, 0) + c * v) % p
            if w:
                y[k] = w
            else:
                y.pop(k, None)

    def scale(self, c, x):
        c %= self.p
        if not c:
            return {}
        p = self.p
        return {k: (c * v) % p for k, v in x.items()}


def field_from_json(v):
    if v == "Q":
        return QQ
    if isinstance(v, str) and v.startswith("GF(") and v.endswith(")"):
        try:
            return PrimeField(int(v[3:-1]))
        except ValueError:
            raise LinAlgError("bad field %r" % (v,))
    raise LinAlgError("bad field %r" % (v,))


# ---- sparse vectors -------------------------------------------------------

def vadd(F, x, y):
    out = dict(x)
    F.axpy(out, F.one, y)
    return out


def vsub(F, x, y):
    out = dict(x)
    F.axpy(out, F.neg(F.one), y)
    return out


def vlin(F, terms):
    """Sum of c*x over (c, x) pairs."""
    out = {}
    for c, x in terms:
        if c:
            F.axpy(out, c, x)
    return out


def unit_vec(i):
    return {i: 1}


def to_sparse(F, v):
    if isinstance(v, dict):
        return {k: F(c) for k, c in v.items() if c}
    return {i: F(c) for i, c in enumerate(v) if c}


def to_dense(F, v, n):
    out = [F.zero] * n
    for k, c in v.items():
        out[k] = c
    return out


def check_len(v, n):
    if isinstance(v, dict):
        if v and (min(v) < 0 or max(v) >= n):
            raise LinAlgError("vector index out of range for dimension %d" % n)
    elif len(v) != n:
        raise LinAlgError("vector of length %d, expected %d" % (len(v), n))


# ---- matrices -------------------------------------------------------------

class Mat:
    """rows x cols matrix over F, stored as a list of sparse columns."""

    __slots__ = ("F", "rows", "cols", "columns")

    def __init__(self, F, rows, cols, columns=None):
        self.F = F
        self.rows = rows
        self.cols = cols
        self.columns = columns if columns is not None else [{} for _ in range(cols)]
        if len(self.columns) != cols:
            raise LinAlgError("column count mismatch")

    @classmethod
    def from_rows(cls, F, rows_list, ncols=None):
        nrows = len(rows_list)
        if ncols is None:
            ncols = len(rows_list[0]) if rows_list else 0
        cols = [{} for _ in range(ncols)]
        for i, r in enumerate(rows_list):
            if len(r) != ncols:
                raise LinAlgError("ragged matrix")
            for j, x in enumerate(r):
                x = F(x)
                if x:
                    cols[j][i] = x
        return cls(F, nrows, ncols, cols)

    @classmethod
    def from_columns(cls, F, nrows, columns):
        return cls(F, nrows, len(columns), [dict(c) for c in columns])

    @classmethod
    def identity(cls, F, n):
        return cls(F, n, n, [{i: F.one} for i in range(n)])

    @classmethod
    def zero(cls, F, rows, cols):
        return cls(F, rows, cols)

    def to_rows(self):
        out = [[self.F.zero] * self.cols for _ in range(self.rows)]
        for j, c in enumerate(self.columns):
            for i, x in c.items():
                out[i][j] = x
        return out

    def row_dicts(self):
        out = [{} for _ in range(self.rows)]
        for j, c in enumerate(self.columns):
            for i, x in c.items():
                out[i][j] = x
        return out

    def col(self, j):
        return self.columns[j]

    def apply(self, v):
        """Matrix times sparse vector."""
        out = {}
        F = self.F
        cols = self.columns
        for j, c in v.items():
            F.axpy(out, c, cols[j])
        return out

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise LinAlgError("shape mismatch %dx%d @ %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        return Mat(self.F, self.rows, other.cols, [self.apply(c) for c in other.columns])

    def __add__(self, other):
        self._same_shape(other)
        return Mat(self.F, self.rows, self.cols,
                   [vadd(self.F, a, b) for a, b in zip(self.columns, other.columns)])

    def __sub__(self, other):
        self._same_shape(other)
        return Mat(self.F, self.rows, self.cols,
                   [vsub(self.F, a, b) for a, b in zip(self.columns, other.columns)])

    def scaled(self, c):
        return Mat(self.F, self.rows, self.cols, [self.F.scale(c, a) for a in self.columns])

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LinAlgError("shape mismatch")

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.rows == other.rows and self.cols == other.cols
                and self.columns == other.columns)

    def __hash__(self):
        return hash((self.rows, self.cols))

    def __repr__(self):
        return "Mat(%dx%d)" % (self.rows, self.cols)

    def is_zero(self):
        return not any(self.columns)

    def transpose(self):
        return Mat(self.F, self.cols, self.rows, self.row_dicts())

    def first_difference(self, other):
        """First (row, col) where the matrices differ, or None."""
        for j, (a, b) in enumerate(zip(self.columns, other.columns)):
            if a != b:
                return (min(k for k in set(a) | set(b) if a.get(k) != b.get(k)), j)
        return None

    def kron(self, other):
        """Kronecker product, row-major indexing (i*rows2 + k, j*cols2 + l)."""
        F = self.F
        r2, c2 = other.rows, other.cols
        cols = []
        for a in self.columns:
            for b in other.columns:
                col = {}
                for i, x in a.items():
                    for k, y in b.items():
                        col[i * r2 + k] = F.mul(x, y)
                cols.append(col)
        return Mat(F, self.rows * r2, self.cols * c2, cols)

    def rank(self):
        return len(rref_rows(self.F, self.columns, self.rows)[1])

    def to_json(self):
        F = self.F
        return [[F.to_json(x) for x in r] for r in self.to_rows()]

    @classmethod
    def from_json(cls, F, data, rows=None, cols=None):
        if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
            raise LinAlgError("matrix must be a list of rows")
        nrows = len(data)
        ncols = len(data[0]) if data else (cols or 0)
        if rows is not None and nrows != rows:
            raise LinAlgError("matrix has %d rows, expected %d" % (nrows, rows))
        if cols is not None and ncols != cols:
            raise LinAlgError("matrix has %d columns, expected %d" % (ncols, cols))
        return cls.from_rows(F, [[F.from_json(x) for x in r] for r in data], ncols)


def hstack(F, nrows, mats):
    cols = []
    for m in mats:
        if m.rows != nrows:
            raise LinAlgError("hstack row mismatch")
        cols.extend(m.columns)
    return Mat(F, nrows, len(cols), cols)


def vstack(F, mats):
    """Stack matrices vertically (same column count)."""
    ncols = mats[0].cols
    cols = [{} for _ in range(ncols)]
    off = 0
    for m in mats:
        if m.cols != ncols:
            raise LinAlgError("vstack column mismatch")
        for j, c in enumerate(m.columns):
            for i, x in c.items():
                cols[j][off + i] = x
        off += m.rows
    return Mat(F, off, ncols, cols)


# ---- row reduction --------------------------------------------------------

class Echelon:
    """Incrementally maintained reduced row echelon basis."""

    def __init__(self, F, n):
        self.F = F
        self.n = n
        self.rows = {}  # pivot column -> row (pivot entry 1, zero on other pivots)
        self._col_index = {}  # column -> set of pivots whose row is nonzero there

    def reduce(self, v):
        """Remainder of v modulo the span (a new dict)."""
        F = self.F
        v = dict(v)
        rows = self.rows
        hits = [k for k in v if k in rows]
        for pcol in hits:
            c = v.get(pcol)
            if c:
                F.axpy(v, F.neg(c), rows[pcol])
        return v

    def add(self, v):
        """Insert v; returns True if the rank grew."""
        F = self.F
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        v = F.scale(F.inv(v[p]), v)
        idx = self._col_index
        for q in list(idx.get(p, ())):
            row = self.rows[q]
            c = row[p]
            old = set(row)
            F.axpy(row, F.neg(c), v)
            new = set(row)
            for k in old - new:
                idx[k].discard(q)
            for k in new - old:
                idx.setdefault(k, set()).add(q)
        idx.pop(p, None)
        self.rows[p] = v
        for k in v:
            if k != p:
                idx.setdefault(k, set()).add(p)
        return True

    def pivots(self):
        return sorted(self.rows)

    def rank(self):
        return len(self.rows)

    def subspace(self):
        ps = self.pivots()
        return Subspace(self.F, self.n, [dict(self.rows[p]) for p in ps], ps)


def rref_rows(F, vectors, n):
    """RREF of the given sparse vectors (as rows in F^n): (rows, pivots)."""
    e = Echelon(F, n)
    for v in vectors:
        e.add(v)
    ps = e.pivots()
    return [e.rows[p] for p in ps], ps


class Subspace:
    """Subspace of F^n with canonical RREF basis."""

    __slots__ = ("F", "ambient_dim", "rows", "pivots", "_pivset")

    def __init__(self, F, n, rows, pivots):
        self.F = F
        self.ambient_dim = n
        self.rows = rows
        self.pivots = pivots
        self._pivset = {p: i for i, p in enumerate(pivots)}

    @classmethod
    def span(cls, F, n, vectors):
        e = Echelon(F, n)
        for v in vectors:
            check_len(v, n)
            e.add(to_sparse(F, v) if not isinstance(v, dict) else v)
        return e.subspace()

    @classmethod
    def zero(cls, F, n):
        return cls(F, n, [], [])

    @classmethod
    def full(cls, F, n):
        return cls(F, n, [{i: F.one} for i in range(n)], list(range(n)))

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [dict(r) for r in self.rows]

    def basis_matrix(self):
        """Rows are the RREF basis."""
        return Mat.from_rows(self.F, [to_dense(self.F, r, self.ambient_dim) for r in self.rows],
                             self.ambient_dim)

    def as_columns(self):
        """n x dim matrix whose columns are the basis vectors."""
        return Mat(self.F, self.ambient_dim, self.dim, [dict(r) for r in self.rows])

    def reduce(self, v):
        F = self.F
        v = dict(v)
        for p, i in self._pivset.items():
            c = v.get(p)
            if c:
                F.axpy(v, F.neg(c), self.rows[i])
        return v

    def contains(self, v):
        if not isinstance(v, dict):
            check_len(v, self.ambient_dim)
            v = to_sparse(self.F, v)
        return not self.reduce(v)

    def coords(self, v):
        """Coordinates of v in the RREF basis, or None if v is not in the span."""
        if not isinstance(v, dict):
            v = to_sparse(self.F, v)
        if self.reduce(v):
            return None
        return {i: v[p] for i, p in enumerate(self.pivots) if v.get(p)}

    def combo(self, coeffs):
        """Vector with the given coordinates in the RREF basis."""
        F = self.F
        out = {}
        for i, c in coeffs.items():
            if c:
                F.axpy(out, c, self.rows[i])
        return out

    def contains_subspace(self, other):
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.pivots == other.pivots and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self.pivots)))

    def __repr__(self):
        return "Subspace(dim %d in %d)" % (self.dim, self.ambient_dim)

    def to_json(self):
        F = self.F
        return [[F.to_json(x) for x in to_dense(F, r, self.ambient_dim)] for r in self.rows]

    def intersect(self, other):
        """Intersection via kernel of [B1; -B2]^T."""
        F = self.F
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(F, self.ambient_dim)
        cols = [dict(r) for r in self.rows] + [F.scale(F.neg(F.one), r) for r in other.rows]
        K = kernel(Mat(F, self.ambient_dim, len(cols), cols))
        vecs = []
        for k in K.rows:
            vecs.append(self.combo({i: c for i, c in k.items() if i < self.dim}))
        return Subspace.span(F, self.ambient_dim, vecs)

    def sum(self, other):
        return Subspace.span(self.F, self.ambient_dim, self.rows + other.rows)


def kernel(m):
    """Null space of m as a Subspace of F^cols."""
    F = m.F
    rows, pivots = rref_rows(F, m.row_dicts(), m.cols)
    pivset = set(pivots)
    free = [j for j in range(m.cols) if j not in pivset]
    vecs = []
    negone = F.neg(F.one)
    for f in free:
        v = {f: F.one}
        for r, p in zip(rows, pivots):
            c = r.get(f)
            if c:
                v[p] = F.mul(negone, c)
        vecs.append(v)
    return Subspace.span(F, m.cols, vecs)


def rank(m):
    return m.rank()


def solve_affine(m, b):
    """Solve m x = b.  Returns None if inconsistent, else (particular, kernel)."""
    F = m.F
    if not isinstance(b, dict):
        check_len(b, m.rows)
        b = to_sparse(F, b)
    else:
        check_len(b, m.rows)
    n = m.cols
    rows = m.row_dicts()
    aug = []
    for i, r in enumerate(rows):
        r = dict(r)
        c = b.get(i)
        if c:
            r[n] = c
        aug.append(r)
    red, pivots = rref_rows(F, aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = {}
    for r, p in zip(red, pivots):
        c = r.get(n)
        if c:
            x[p] = c
    return x, kernel(m)


def span_contains(s, v):
    check_len(v, s.ambient_dim)
    return s.contains(v)


def inverse(m):
    """Inverse of a square matrix, or None if singular."""
    F = m.F
    if m.rows != m.cols:
        raise LinAlgError("inverse of non-square matrix")
    n = m.rows
    rows = m.row_dicts()
    aug = []
    for i, r in enumerate(rows):
        r = dict(r)
        r[n + i] = F.one
        aug.append(r)
    red, pivots = rref_rows(F, aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        return None
    cols = [{} for _ in range(n)]
    for i, r in enumerate(red):
        for k, x in r.items():
            if k >= n:
                cols[k - n][i] = x
    return Mat(F, n, n, cols)


def det(m):
    """Determinant by Gaussian elimination (dense, for small matrices)."""
    F = m.F
    n = m.rows
    if n != m.cols:
        raise LinAlgError("det of non-square matrix")
    a = m.to_rows()
    d = F.one
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return F.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = F.neg(d)
        pv = a[c][c]
        d = F.mul(d, pv)
        inv = F.inv(pv)
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = F.mul(f, inv)
                ar, ac = a[r], a[c]
                for k in range(c, n):
                    if ac[k]:
                        ar[k] = F.sub(ar[k], F.mul(f, ac[k]))
    return d


class LinearSystem:
    """Linear equations in nvars unknowns, assembled by probing a linear map.

    constraint(x) must be linear in the sparse vector x and return a sparse
    dict keyed by arbitrary hashable equation labels.
    """

    def __init__(self, F, nvars, constraint, rhs=None):
        self.F = F
        self.nvars = nvars
        self.constraint = constraint
        keys = {}
        cols = []
        for k in range(nvars):
            v = constraint({k: F.one})
            col = {}
            for key, c in v.items():
                if key not in keys:
                    keys[key] = len(keys)
                col[keys[key]] = c
            cols.append(col)
        rhs = rhs or {}
        for key in rhs:
            if key not in keys:
                keys[key] = len(keys)
        self.keys = keys
        self.matrix = Mat(F, len(keys), nvars, cols)
        self.rhs = {keys[key]: c for key, c in rhs.items() if c}

    def solve(self):
        return solve_affine(self.matrix, self.rhs)

    def kernel(self):
        return kernel(self.matrix)

    def satisfied_by(self, x):
        return self.matrix.apply(x) == self.rhs


class Equations:
    """Sparse linear equations assembled coefficient by coefficient.

    Rows are keyed by arbitrary hashable labels; variables are integers
    below nvars.  lf arguments are linear forms {var: coeff}.
    """

    def __init__(self, F, nvars):
        self.F = F
        self.nvars = nvars
        self.rows = {}
        self.rhs = {}

    def add_form(self, key, form, scale=None):
        F = self.F
        row = self.rows.setdefault(key, {})
        for var, c in form.items():
            if scale is not None:
                c = F.mul(c, scale)
            w = F.add(row.get(var, F.zero), c)
            if w:
                row[var] = w
            else:
                row.pop(var, None)

    def add_vec(self, prefix, lv, scale=None):
        """Add a vector of linear forms {component: form} under keys (prefix, component)."""
        for k, form in lv.items():
            self.add_form((prefix, k), form, scale)

    def set_rhs(self, key, c):
        self.rows.setdefault(key, {})
        if c:
            self.rhs[key] = c

    def matrix(self):
        keys = {k: i for i, k in enumerate(self.rows)}
        cols = [{} for _ in range(self.nvars)]
        for k, row in self.rows.items():
            i = keys[k]
            for var, c in row.items():
                cols[var][i] = c
        return Mat(self.F, len(keys), self.nvars, cols), {keys[k]: c for k, c in self.rhs.items()}

    def solve(self):
        M, b = self.matrix()
        return solve_affine(M, b)

    def kernel(self):
        return kernel(self.matrix()[0])

    def residual(self, x):
        """Rows violated by the sparse assignment x (as a dict key -> value)."""
        F = self.F
        out = {}
        for k, row in self.rows.items():
            v = F.zero
            for var, c in row.items():
                if var in x:
                    v = F.add(v, F.mul(c, x[var]))
            v = F.sub(v, self.rhs.get(k, F.zero))
            if v:
                out[k] = v
        return out
