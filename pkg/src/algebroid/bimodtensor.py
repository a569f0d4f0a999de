"""Base-module structures on A and balanced tensor products as quotient spaces.

A balanced tensor M (x)_B N is realized as the quotient of M (x)_k N by
span{(x.b) (x) y - x (x) (b.y)}.  The relation span is brought to RREF; the
non-pivot coordinates give the canonical section, and the projection sends a
pivot coordinate e_p to -(row_p restricted to the non-pivots).

Factors may themselves be quotients, so (M1 (x) M2) (x) M3 and M1 (x) (M2 (x) M3)
are built by the same class.  Every space exposes its ambient dimension (the
plain tensor power of A it lives in) together with proj/sect on ambient
coordinates.
"""
from .errors import RangesDoNotCommute, DoesNotDescend
from .exactla import Mat, Echelon

LOWER_LEFT = "LowerLeft"      # _B A : b.a = s(b) a
LOWER_RIGHT = "LowerRight"    # A_B : a.b = t(b) a
UPPER_RIGHT = "UpperRight"    # A^B : a.b = a s(b)
UPPER_LEFT = "UpperLeft"      # ^B A: b.a = a t(b)
MOD_KINDS = (LOWER_LEFT, LOWER_RIGHT, UPPER_RIGHT, UPPER_LEFT)


def module_actions(A, s, t, kind):
    """Matrices on A of the base basis elements for one of the four structures."""
    if kind == LOWER_LEFT:
        return [A.lmul(s.col(b)) for b in range(s.cols)]
    if kind == LOWER_RIGHT:
        return [A.lmul(t.col(b)) for b in range(t.cols)]
    if kind == UPPER_RIGHT:
        return [A.rmul(s.col(b)) for b in range(s.cols)]
    if kind == UPPER_LEFT:
        return [A.rmul(t.col(b)) for b in range(t.cols)]
    raise ValueError("unknown module kind %r" % (kind,))


def check_ranges_commute(A, s, t):
    for b in range(s.cols):
        x = s.col(b)
        for c in range(t.cols):
            y = t.col(c)
            if A.mul(x, y) != A.mul(y, x):
                raise RangesDoNotCommute(b, c)


class FullSpace:
    """A plain vector space viewed as a (trivial) quotient of itself."""

    def __init__(self, F, n, label=None):
        self.F = F
        self.dim = n
        self.ambient = n
        self.label = label or "k^%d" % n

    def proj_vec(self, v):
        return dict(v)

    def sect_vec(self, c):
        return dict(c)

    def kernel_span(self):
        return iter(())

    def proj_col(self, j):
        return {j: self.F.one}

    def __repr__(self):
        return self.label


def _tensor_vec(F, x, y, m):
    out = {}
    for a, c in x.items():
        for b, d in y.items():
            out[a * m + b] = F.mul(c, d)
    return out


class BalancedTensor:
    """left (x)_B right, relations acts1[b] x (x) y - x (x) acts2[b] y.

    acts1/acts2 are matrices on the quotient coordinates of the factors.
    """

    def __init__(self, F, left, right, acts1, acts2, label=None, base_dim=None):
        self.F = F
        self.left = left
        self.right = right
        self.label = label or "(%r (x) %r)" % (left, right)
        d1, d2 = left.dim, right.dim
        self.inner = d1 * d2
        self.ambient = left.ambient * right.ambient
        if len(acts1) != len(acts2):
            raise ValueError("action lists of different length")
        self.base_dim = base_dim if base_dim is not None else len(acts1)
        ech = Echelon(F, self.inner)
        negone = F.neg(F.one)
        for M, N in zip(acts1, acts2):
            if _is_identity(M) and _is_identity(N):
                continue
            for x in range(d1):
                mx = M.col(x)
                for y in range(d2):
                    v = {}
                    for i, c in mx.items():
                        v[i * d2 + y] = c
                    for j, c in N.col(y).items():
                        k = x * d2 + j
                        w = v.get(k, F.zero)
                        w = F.add(w, F.mul(negone, c))
                        if w:
                            v[k] = w
                        else:
                            v.pop(k, None)
                    if v:
                        ech.add(v)
        self.relations = ech.subspace()
        piv = set(self.relations.pivots)
        self.complement = [j for j in range(self.inner) if j not in piv]
        self.pos = {j: i for i, j in enumerate(self.complement)}
        self.dim = len(self.complement)
        self._rowof = {p: r for p, r in zip(self.relations.pivots, self.relations.rows)}
        self._inner_img = {}
        self._amb_img = {}

    def __repr__(self):
        return self.label

    # inner coordinates -------------------------------------------------
    def inner_proj_col(self, j):
        img = self._inner_img.get(j)
        if img is None:
            F = self.F
            if j in self.pos:
                img = {self.pos[j]: F.one}
            else:
                row = self._rowof[j]
                img = {self.pos[c]: F.neg(x) for c, x in row.items() if c != j}
            self._inner_img[j] = img
        return img

    def inner_proj(self, v):
        F = self.F
        out = {}
        for j, c in v.items():
            F.axpy(out, c, self.inner_proj_col(j))
        return out

    def inner_sect(self, c):
        comp = self.complement
        return {comp[i]: x for i, x in c.items()}

    # ambient coordinates -----------------------------------------------
    def proj_col(self, j):
        img = self._amb_img.get(j)
        if img is None:
            ra = self.right.ambient
            i, k = divmod(j, ra)
            x = self.left.proj_col(i)
            y = self.right.proj_col(k)
            img = self.inner_proj(_tensor_vec(self.F, x, y, self.right.dim))
            self._amb_img[j] = img
        return img

    def proj_vec(self, v):
        F = self.F
        out = {}
        for j, c in v.items():
            F.axpy(out, c, self.proj_col(j))
        return out

    def sect_vec(self, c):
        F = self.F
        d2 = self.right.dim
        ra = self.right.ambient
        out = {}
        for j, x in self.inner_sect(c).items():
            a, b = divmod(j, d2)
            la = self.left.sect_vec({a: F.one})
            rb = self.right.sect_vec({b: F.one})
            for p, u in la.items():
                for q, w in rb.items():
                    k = p * ra + q
                    val = F.add(out.get(k, F.zero), F.mul(x, F.mul(u, w)))
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return out

    def kernel_span(self):
        """Ambient vectors spanning the kernel of proj."""
        ra = self.right.ambient
        for r in self.relations.rows:
            yield self.sect_inner_vector(r)
        for k in self.left.kernel_span():
            for j in range(ra):
                yield {i * ra + j: c for i, c in k.items()}
        for k in self.right.kernel_span():
            for i in range(self.left.ambient):
                yield {i * ra + j: c for j, c in k.items()}

    def sect_inner_vector(self, v):
        """Lift an inner-coordinate vector to ambient coordinates via the factor sections."""
        F = self.F
        d2 = self.right.dim
        ra = self.right.ambient
        out = {}
        for j, x in v.items():
            a, b = divmod(j, d2)
            la = self.left.sect_vec({a: F.one})
            rb = self.right.sect_vec({b: F.one})
            for p, u in la.items():
                for q, w in rb.items():
                    k = p * ra + q
                    val = F.add(out.get(k, F.zero), F.mul(x, F.mul(u, w)))
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return out

    def proj_mat(self):
        return Mat(self.F, self.dim, self.ambient, [self.proj_col(j) for j in range(self.ambient)])

    def sect_mat(self):
        F = self.F
        return Mat(F, self.ambient, self.dim, [self.sect_vec({i: F.one}) for i in range(self.dim)])

    def pure(self, x, y):
        """Class of x (x) y for ambient vectors x, y of the factors."""
        return self.proj_vec(_tensor_vec(self.F, x, y, self.right.ambient))


def _is_identity(M):
    if M.rows != M.cols:
        return False
    for j, c in enumerate(M.columns):
        if len(c) != 1 or c.get(j) != 1:
            return False
    return True


def balanced_tensor(A, s, t, kind1, kind2, label=None):
    """A (x)_B A with the two factors carrying the given module structures.

    s, t are the matrices of the source and target maps B -> A.
    """
    check_ranges_commute(A, s, t)
    F = A.F
    acts1 = module_actions(A, s, t, kind1)
    acts2 = module_actions(A, s, t, kind2)
    sp = FullSpace(F, A.dim, "A")
    return BalancedTensor(F, sp, sp, acts1, acts2, label or "A %s (x) %s A" % (kind1, kind2))


def tensor_from_actions(A, acts1, acts2, label=None):
    sp = FullSpace(A.F, A.dim, "A")
    return BalancedTensor(A.F, sp, sp, acts1, acts2, label)


def descend_factor_action(Q, mat, side):
    """Action of an endomorphism of one factor on the quotient coordinates of Q.

    side 1 acts on the left factor, side 2 on the right one.  Raises
    DoesNotDescend when mat does not preserve the relations.
    """
    F = Q.F
    d2 = Q.right.dim

    def f_inner(v):
        out = {}
        for j, c in v.items():
            a, b = divmod(j, d2)
            if side == 1:
                img = {i * d2 + b: x for i, x in mat.col(a).items()}
            else:
                img = {a * d2 + i: x for i, x in mat.col(b).items()}
            F.axpy(out, c, img)
        return out

    for idx, r in enumerate(Q.relations.rows):
        if Q.inner_proj(f_inner(r)):
            raise DoesNotDescend(idx, "factor action does not preserve relations")
    cols = []
    for i in range(Q.dim):
        cols.append(Q.inner_proj(f_inner(Q.inner_sect({i: F.one}))))
    return Mat(F, Q.dim, Q.dim, cols)


def chain_tensor(F, dims, links, bracket="left"):
    """V_0 (x) V_1 (x) ... with consecutive factors linked by the given relations.

    links[i] = (acts on V_i, acts on V_{i+1}) lists of matrices indexed by a
    base basis.  bracket="left" builds ((V0(x)V1)(x)V2)..., "right" builds
    V0(x)(V1(x)(V2...)).  Both live on the same ambient space.
    """
    spaces = [FullSpace(F, d) for d in dims]
    n = len(dims)
    if len(links) != n - 1:
        raise ValueError("need one link per adjacent pair")
    if bracket == "left":
        Q = BalancedTensor(F, spaces[0], spaces[1], links[0][0], links[0][1])
        for k in range(1, n - 1):
            a1 = [descend_factor_action(Q, M, 2) for M in links[k][0]]
            Q = BalancedTensor(F, Q, spaces[k + 1], a1, links[k][1])
        return Q
    if bracket == "right":
        Q = BalancedTensor(F, spaces[-2], spaces[-1], links[-1][0], links[-1][1])
        for k in range(n - 3, -1, -1):
            a2 = [descend_factor_action(Q, M, 1) for M in links[k][1]]
            Q = BalancedTensor(F, spaces[k], Q, links[k][0], a2)
        return Q
    raise ValueError("bracket must be 'left' or 'right'")


def iterated_tensor(A, links, bracket="left"):
    """Iterated balanced tensor power of A; see chain_tensor."""
    return chain_tensor(A.F, [A.dim] * (len(links) + 1), links, bracket)


def descend_map(f, src, tgt):
    """Matrix of the map induced on quotients by f: src.ambient -> tgt.ambient.

    f is a Mat or a function on sparse ambient vectors.  Checks that every
    kernel vector of src maps into the kernel of tgt.
    """
    F = src.F
    fn = f.apply if isinstance(f, Mat) else f
    for idx, r in enumerate(src.kernel_span()):
        img = tgt.proj_vec(fn(r))
        if img:
            raise DoesNotDescend(idx, "relation %d maps outside the target relations" % idx)
    cols = [tgt.proj_vec(fn(src.sect_vec({i: F.one}))) for i in range(src.dim)]
    return Mat(F, tgt.dim, src.dim, cols)


def intertwiner(q1, q2):
    """Canonical identification of two quotients of the same ambient space."""
    if q1.ambient != q2.ambient:
        raise ValueError("different ambient spaces")
    return descend_map(lambda v: v, q1, q2)
