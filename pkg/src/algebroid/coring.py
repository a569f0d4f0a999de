"""Corings over a base algebra and their comodules."""
from .errors import AxiomError, DoesNotDescend
from .bimodtensor import BalancedTensor, FullSpace, chain_tensor, descend_map


class NotBalanced(AxiomError):
    def __init__(self, witness, detail=""):
        super().__init__("NotBalanced", witness, detail)


class NotCoassociative(AxiomError):
    def __init__(self, index):
        super().__init__("NotCoassociative", index)


class CounitFails(AxiomError):
    def __init__(self, side, index):
        super().__init__("CounitFails", (side, index))


def tensor_ambient(F, x, y, m):
    out = {}
    for a, c in x.items():
        for b, d in y.items():
            out[a * m + b] = F.mul(c, d)
    return out


def apply_left_factor(F, f, v, m):
    """(f (x) id) on a vector of V (x) W with dim W = m; f maps sparse vectors to sparse vectors."""
    out = {}
    groups = {}
    for k, c in v.items():
        a, b = divmod(k, m)
        groups.setdefault(b, {})[a] = c
    for b, x in groups.items():
        for a, c in f(x).items():
            k = a * m + b
            w = F.add(out.get(k, F.zero), c)
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


def apply_right_factor(F, f, v, m, m_out):
    """(id (x) f) on a vector of V (x) W, dim W = m, f: W -> W' with dim W' = m_out."""
    out = {}
    groups = {}
    for k, c in v.items():
        a, b = divmod(k, m)
        groups.setdefault(a, {})[b] = c
    for a, y in groups.items():
        for b, c in f(y).items():
            k = a * m_out + b
            w = F.add(out.get(k, F.zero), c)
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


class CoringData:
    """(A, gamma, pi) over a base B.

    act_left[b], act_right[b] are the matrices on A of b acting from the left
    and from the right; the coproduct lands in A (x)_B A with relations
    (x.b) (x) y - x (x) (b.y).  The counit is identified through
    B (x)_B A = A via b (x) a -> b.a and A (x)_B B = A via a (x) b -> a.b.
    """

    def __init__(self, A, B, act_left, act_right, gamma_lift, pi, label="coring"):
        self.A = A
        self.B = B
        self.F = A.F
        self.act_left = act_left
        self.act_right = act_right
        self.gamma_lift = gamma_lift
        self.pi = pi
        self.label = label
        self.Q = BalancedTensor(self.F, FullSpace(self.F, A.dim), FullSpace(self.F, A.dim),
                                act_right, act_left, label="A (x)_B A")
        self._Q3 = None

    @property
    def Q3(self):
        if self._Q3 is None:
            self._Q3 = chain_tensor(self.F, [self.A.dim] * 3,
                                    [(self.act_right, self.act_left), (self.act_right, self.act_left)])
        return self._Q3

    def gamma(self, a):
        """Coproduct of a (sparse vector), in quotient coordinates."""
        return self.Q.proj_vec(self.gamma_lift.apply(a))

    def gamma_canonical_lift(self, a):
        return self.Q.sect_vec(self.gamma(a))

    def act_by(self, acts, b, v):
        F = self.F
        out = {}
        for i, c in b.items():
            F.axpy(out, c, acts[i].apply(v))
        return out

    def counit_left(self, v):
        """(pi (x) A) on an ambient vector of A (x) A, landing in A."""
        F = self.F
        n = self.A.dim
        out = {}
        groups = {}
        for k, c in v.items():
            x, y = divmod(k, n)
            groups.setdefault(x, {})[y] = c
        for x, y in groups.items():
            px = self.pi.col(x)
            F.axpy(out, F.one, self.act_by(self.act_left, px, y))
        return out

    def counit_right(self, v):
        F = self.F
        n = self.A.dim
        out = {}
        groups = {}
        for k, c in v.items():
            x, y = divmod(k, n)
            groups.setdefault(y, {})[x] = c
        for y, x in groups.items():
            py = self.pi.col(y)
            F.axpy(out, F.one, self.act_by(self.act_right, py, x))
        return out

    def check(self):
        """Run every coring axiom; raises on the first failure."""
        F = self.F
        A, B = self.A, self.B
        n, m = A.dim, B.dim
        g = self.gamma_lift
        if g.rows != n * n or g.cols != n or self.pi.rows != m or self.pi.cols != n:
            raise NotBalanced(None, "shape of gamma or pi")
        for b in range(m):
            for c in range(m):
                if (self.act_left[b] @ self.act_right[c]) != (self.act_right[c] @ self.act_left[b]):
                    raise NotBalanced((b, c), "left and right base actions do not commute")
        # gamma and pi are bimodule maps
        Bl = [B.lmul_basis(b) for b in range(m)]
        Br = [B.rmul_basis(b) for b in range(m)]
        for b in range(m):
            for a in range(n):
                ea = {a: F.one}
                lhs = self.gamma(self.act_left[b].apply(ea))
                rhs = self.Q.proj_vec(apply_left_factor(F, self.act_left[b].apply, g.col(a), n))
                if lhs != rhs:
                    raise NotBalanced((b, a), "gamma is not left B-linear")
                lhs = self.gamma(self.act_right[b].apply(ea))
                rhs = self.Q.proj_vec(apply_right_factor(F, self.act_right[b].apply, g.col(a), n, n))
                if lhs != rhs:
                    raise NotBalanced((b, a), "gamma is not right B-linear")
                if self.pi.apply(self.act_left[b].apply(ea)) != Bl[b].apply(self.pi.col(a)):
                    raise NotBalanced((b, a), "pi is not left B-linear")
                if self.pi.apply(self.act_right[b].apply(ea)) != Br[b].apply(self.pi.col(a)):
                    raise NotBalanced((b, a), "pi is not right B-linear")
        # counit maps descend and act as identity
        Afull = FullSpace(F, n)
        try:
            cl = descend_map(self.counit_left, self.Q, Afull)
            cr = descend_map(self.counit_right, self.Q, Afull)
        except DoesNotDescend as e:
            raise NotBalanced(e.witness, "counit map does not descend")
        for a in range(n):
            ga = self.gamma({a: F.one})
            if cl.apply(ga) != {a: F.one}:
                raise CounitFails("left", a)
            if cr.apply(ga) != {a: F.one}:
                raise CounitFails("right", a)
        # coassociativity
        Q3 = self.Q3
        gl = descend_map(lambda v: apply_left_factor(F, g.apply, v, n), self.Q, Q3)
        gr = descend_map(lambda v: apply_right_factor(F, g.apply, v, n, n * n), self.Q, Q3)
        for a in range(n):
            ga = self.gamma({a: F.one})
            if gl.apply(ga) != gr.apply(ga):
                raise NotCoassociative(a)
        return self


def mk_coring(A, B, act_left, act_right, gamma_lift, pi, label="coring"):
    return CoringData(A, B, act_left, act_right, gamma_lift, pi, label).check()


def check_grouplike(c, g):
    F = c.F
    g = dict(g)
    lhs = c.gamma(g)
    rhs = c.Q.proj_vec(tensor_ambient(F, g, g, c.A.dim))
    return lhs == rhs and c.pi.apply(g) == c.B.unit


class Comodule:
    """Comodule of dimension dim over a coring.

    side "left": coaction M -> A (x)_B M, acts = left base action on M.
    side "right": coaction M -> M (x)_B A, acts = right base action on M.
    coaction_lift is a matrix into A (x)_k M (index a*dim + m) or M (x)_k A.
    """

    def __init__(self, dim, coaction_lift, acts, side):
        self.dim = dim
        self.coaction_lift = coaction_lift
        self.acts = acts
        self.side = side


def check_comodule(c, M):
    F = c.F
    n = c.A.dim
    d = M.dim
    A1, Md = FullSpace(F, n), FullSpace(F, d)
    rho = M.coaction_lift
    if M.side == "left":
        if rho.rows != n * d or rho.cols != d:
            raise NotBalanced(None, "coaction shape")
        T = BalancedTensor(F, A1, Md, c.act_right, M.acts)
        T3 = chain_tensor(F, [n, n, d], [(c.act_right, c.act_left), (c.act_right, M.acts)])
        # base linearity
        for b in range(c.B.dim):
            for i in range(d):
                lhs = T.proj_vec(rho.apply(M.acts[b].col(i)))
                rhs = T.proj_vec(apply_left_factor(F, c.act_left[b].apply, rho.col(i), d))
                if lhs != rhs:
                    raise NotBalanced((b, i), "coaction is not B-linear")

        def counit(v):
            out = {}
            for k, x in v.items():
                a, j = divmod(k, d)
                F.axpy(out, x, _act(F, M.acts, c.pi.col(a), {j: F.one}))
            return out
        try:
            cm = descend_map(counit, T, FullSpace(F, d))
            g1 = descend_map(lambda v: apply_left_factor(F, c.gamma_lift.apply, v, d), T, T3)
            g2 = descend_map(lambda v: apply_right_factor(F, rho.apply, v, d, n * d), T, T3)
        except DoesNotDescend as e:
            raise NotBalanced(e.witness, "structure map does not descend")
    else:
        if rho.rows != n * d or rho.cols != d:
            raise NotBalanced(None, "coaction shape")
        T = BalancedTensor(F, Md, A1, M.acts, c.act_left)
        T3 = chain_tensor(F, [d, n, n], [(M.acts, c.act_left), (c.act_right, c.act_left)])
        for b in range(c.B.dim):
            for i in range(d):
                lhs = T.proj_vec(rho.apply(M.acts[b].col(i)))
                rhs = T.proj_vec(apply_right_factor(F, c.act_right[b].apply, rho.col(i), n, n))
                if lhs != rhs:
                    raise NotBalanced((b, i), "coaction is not B-linear")

        def counit(v):
            out = {}
            for k, x in v.items():
                j, a = divmod(k, n)
                F.axpy(out, x, _act(F, M.acts, c.pi.col(a), {j: F.one}))
            return out
        try:
            cm = descend_map(counit, T, FullSpace(F, d))
            g1 = descend_map(lambda v: apply_left_factor(F, rho.apply, v, n), T, T3)
            g2 = descend_map(lambda v: apply_right_factor(F, c.gamma_lift.apply, v, n, n * n), T, T3)
        except DoesNotDescend as e:
            raise NotBalanced(e.witness, "structure map does not descend")
    for i in range(d):
        r = T.proj_vec(rho.col(i))
        if cm.apply(r) != {i: F.one}:
            raise CounitFails(M.side, i)
        if g1.apply(r) != g2.apply(r):
            raise NotCoassociative(i)
    return M


def _act(F, acts, b, v):
    out = {}
    for i, c in b.items():
        F.axpy(out, c, acts[i].apply(v))
    return out


def regular_comodule(c, side):
    """(A, gamma) as a left or right comodule over its own coring."""
    n = c.A.dim
    acts = c.act_left if side == "left" else c.act_right
    return Comodule(n, c.gamma_lift, acts, side)
