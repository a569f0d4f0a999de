"""Left and right bialgebroids, their duals, and the maps sigma and chi.

A functional phi: A -> B is stored as a vector of length dim A * dim B with
phi(e_a) = sum_b phi[a*dim B + b] e_b.
"""
from .errors import AxiomError, InternalCheckFailed, NotAModule
from .exactla import Mat, kernel, vstack
from .algebra import (opposite, check_alg_map, HOM, ANTI, mk_algebra)
from .bimodtensor import check_ranges_commute
from .coring import CoringData, NotBalanced, NotCoassociative, CounitFails


class AxiomReport:
    """Ordered list of named checks with pass/fail and witness."""

    def __init__(self, subject):
        self.subject = subject
        self.items = []

    def add(self, name, passed, witness=None, note=None):
        item = {"check": name, "passed": passed}
        if witness is not None:
            item["witness"] = witness
        if note:
            item["note"] = note
        self.items.append(item)
        return passed

    @property
    def ok(self):
        return all(i["passed"] is not False for i in self.items)

    def first_failure(self):
        return next((i for i in self.items if i["passed"] is False), None)

    def to_json(self):
        return {"subject": self.subject, "ok": self.ok, "checks": self.items}

    def extend(self, other, prefix=""):
        for i in other.items:
            j = dict(i)
            j["check"] = prefix + j["check"]
            self.items.append(j)


class AxiomFailure(AxiomError):
    def __init__(self, report):
        self.report = report
        f = report.first_failure()
        super().__init__(f["check"], f.get("witness"), f.get("note", ""))


def _witness(e):
    w = e.witness
    if isinstance(w, tuple):
        return list(w)
    return w


def tensor_vec(F, x, y, m):
    out = {}
    for a, c in x.items():
        for b, d in y.items():
            out[a * m + b] = F.mul(c, d)
    return out


class LeftBialgebroid:
    """(A, B, s, t, gamma, pi) with gamma landing in A_B (x)_B A."""

    side = "left"

    def __init__(self, A, B, s, t, gamma_lift, pi, label="left bialgebroid"):
        self.A = A
        self.B = B
        self.F = A.F
        self.s = s
        self.t = t
        self.gamma_lift = gamma_lift
        self.pi = pi
        self.label = label
        m = B.dim
        self.src_l = [A.lmul(s.col(b)) for b in range(m)]
        self.tgt_l = [A.lmul(t.col(b)) for b in range(m)]
        self.coring = CoringData(A, B, self.src_l, self.tgt_l, gamma_lift, pi, label)
        self.Q = self.coring.Q
        self._lifts = {}

    def gamma(self, a):
        return self.Q.proj_vec(self.gamma_lift.apply(a))

    def lift(self, i):
        """Canonical lift of gamma(e_i): sect(proj(gamma_lift e_i))."""
        v = self._lifts.get(i)
        if v is None:
            v = self.Q.sect_vec(self.gamma({i: self.F.one}))
            self._lifts[i] = v
        return v

    def lift_terms(self, a):
        """Canonical lift of gamma(a) as a list of (coefficient, i, j) with e_i (x) e_j."""
        F = self.F
        n = self.A.dim
        acc = {}
        for i, c in a.items():
            F.axpy(acc, c, self.lift(i))
        return [(c,) + divmod(k, n) for k, c in sorted(acc.items())]

    # axioms -----------------------------------------------------------
    def axiom_report(self):
        A, B, F = self.A, self.B, self.F
        n, m = A.dim, B.dim
        rep = AxiomReport(self.label)
        try:
            check_alg_map(self.s, B, A, HOM)
            rep.add("source is an algebra map", True)
        except AxiomError as e:
            rep.add("source is an algebra map", False, _witness(e), e.name)
            return rep
        try:
            check_alg_map(self.t, B, A, ANTI)
            rep.add("target is an anti-algebra map", True)
        except AxiomError as e:
            rep.add("target is an anti-algebra map", False, _witness(e), e.name)
            return rep
        try:
            check_ranges_commute(A, self.s, self.t)
            rep.add("source and target ranges commute", True)
        except AxiomError as e:
            rep.add("source and target ranges commute", False, _witness(e))
            return rep
        try:
            self.coring.check()
            rep.add("coring axioms (bimodule maps, counit, coassociativity)", True)
        except (NotBalanced, NotCoassociative, CounitFails) as e:
            rep.add("coring axioms (bimodule maps, counit, coassociativity)", False, _witness(e),
                    str(e))
            return rep
        # Takeuchi condition: a1 t(b) (x) a2 = a1 (x) a2 s(b)
        Rt = [A.rmul(self.t.col(b)) for b in range(m)]
        Rs = [A.rmul(self.s.col(b)) for b in range(m)]
        tak = None
        for a in range(n):
            g = self.gamma_lift.col(a)
            for b in range(m):
                v = {}
                for k, c in g.items():
                    x, y = divmod(k, n)
                    F.axpy(v, c, tensor_vec(F, Rt[b].col(x), {y: F.one}, n))
                    F.axpy(v, F.neg(c), tensor_vec(F, {x: F.one}, Rs[b].col(y), n))
                if self.Q.proj_vec(v):
                    tak = [a, b]
                    break
            if tak:
                break
        rep.add("Takeuchi condition (image of gamma)", tak is None, tak)
        one = A.unit
        rep.add("gamma(1) = 1 (x) 1",
                self.gamma(one) == self.Q.proj_vec(tensor_vec(F, one, one, n)))
        if tak is None:
            w = None
            for a in range(n):
                ga = self.gamma_lift.col(a)
                for b in range(n):
                    gb = self.gamma_lift.col(b)
                    prod = {}
                    for k1, c1 in ga.items():
                        x1, y1 = divmod(k1, n)
                        for k2, c2 in gb.items():
                            x2, y2 = divmod(k2, n)
                            F.axpy(prod, F.mul(c1, c2),
                                   tensor_vec(F, A.mult[x1][x2], A.mult[y1][y2], n))
                    if self.Q.proj_vec(prod) != self.gamma(A.mult[a][b]):
                        w = [a, b]
                        break
                if w:
                    break
            rep.add("gamma multiplicative", w is None, w)
        else:
            rep.add("gamma multiplicative", None, note="skipped: requires the Takeuchi condition")
        rep.add("pi(1) = 1", self.pi.apply(one) == B.unit)
        w5 = w6 = None
        for a in range(n):
            for b in range(n):
                pab = self.pi.apply(A.mult[a][b])
                pb = self.pi.col(b)
                ea = {a: F.one}
                if w5 is None and self.pi.apply(A.mul(ea, self.s.apply(pb))) != pab:
                    w5 = [a, b]
                if w6 is None and self.pi.apply(A.mul(ea, self.t.apply(pb))) != pab:
                    w6 = [a, b]
        rep.add("pi(a s(pi(b))) = pi(ab)", w5 is None, w5)
        rep.add("pi(a t(pi(b))) = pi(ab)", w6 is None, w6)
        return rep

    def verify(self):
        rep = self.axiom_report()
        if not rep.ok:
            raise AxiomFailure(rep)
        return self


def mk_left_bialgebroid(A, B, s, t, gamma_lift, pi, label="left bialgebroid"):
    return LeftBialgebroid(A, B, s, t, gamma_lift, pi, label).verify()


def flip_matrix(F, n):
    return Mat(F, n * n, n * n, [{(k % n) * n + k // n: F.one} for k in range(n * n)])


def cop(l):
    F = l.F
    n = l.A.dim
    g = flip_matrix(F, n) @ l.gamma_lift
    return LeftBialgebroid(l.A, opposite(l.B), l.t, l.s, g, l.pi, l.label + " cop")


class RightBialgebroid:
    """(A, R, s, t, gamma, pi) with gamma landing in A^R (x)^R A.

    Checked through the left bialgebroid (A^op, R, t, s, gamma, pi).
    """

    side = "right"

    def __init__(self, A, R, s, t, gamma_lift, pi, label="right bialgebroid"):
        self.A = A
        self.B = R
        self.F = A.F
        self.s = s
        self.t = t
        self.gamma_lift = gamma_lift
        self.pi = pi
        self.label = label
        self.as_left = LeftBialgebroid(opposite(A), R, t, s, gamma_lift, pi, label + " (as left on A^op)")
        self.Q = self.as_left.Q

    def gamma(self, a):
        return self.Q.proj_vec(self.gamma_lift.apply(a))

    def lift(self, i):
        return self.as_left.lift(i)

    def lift_terms(self, a):
        return self.as_left.lift_terms(a)

    def axiom_report(self):
        rep = self.as_left.axiom_report()
        rep.subject = self.label
        return rep

    def verify(self):
        rep = self.axiom_report()
        if not rep.ok:
            raise AxiomFailure(rep)
        return self


def mk_right_bialgebroid(A, R, s, t, gamma_lift, pi, label="right bialgebroid"):
    return RightBialgebroid(A, R, s, t, gamma_lift, pi, label).verify()


def op(l):
    """(A^op, B, t, s, gamma, pi): a right bialgebroid."""
    return RightBialgebroid(opposite(l.A), l.B, l.t, l.s, l.gamma_lift, l.pi, l.label + " op")


# ---- functionals -------------------------------------------------------------

class Functionals:
    """Linear maps A -> B as vectors of length n*m."""

    def __init__(self, A, B):
        self.A = A
        self.B = B
        self.F = A.F
        self.n = A.dim
        self.m = B.dim

    def value(self, phi, a):
        """phi(a) for a sparse vector a."""
        F = self.F
        m = self.m
        out = {}
        for i, c in a.items():
            for b in range(m):
                x = phi.get(i * m + b)
                if x:
                    w = F.add(out.get(b, F.zero), F.mul(c, x))
                    if w:
                        out[b] = w
                    else:
                        out.pop(b, None)
        return out

    def from_map(self, fn):
        """Functional with phi(e_a) = fn(e_a)."""
        F = self.F
        m = self.m
        out = {}
        for a in range(self.n):
            for b, c in fn({a: F.one}).items():
                out[a * m + b] = c
        return out

    def from_mat(self, M):
        return self.from_map(M.apply)

    def to_mat(self, phi):
        F = self.F
        m = self.m
        cols = [{} for _ in range(self.n)]
        for k, c in phi.items():
            a, b = divmod(k, m)
            cols[a][b] = c
        return Mat(F, m, self.n, cols)

    def precompose(self, phi, fn):
        """a -> phi(fn(a))."""
        return self.from_map(lambda a: self.value(phi, fn(a)))


def functional_space(A, B, constraint):
    """Kernel of a linear constraint on functionals A -> B.

    constraint(phi) returns a sparse vector (any length, by dict keys) that
    vanishes exactly on admissible phi; it must be linear in phi.
    """
    F = A.F
    N = A.dim * B.dim
    cols = []
    keys = {}
    raw = []
    for k in range(N):
        v = constraint({k: F.one})
        raw.append(v)
        for key in v:
            if key not in keys:
                keys[key] = len(keys)
    for v in raw:
        cols.append({keys[key]: c for key, c in v.items()})
    return kernel(Mat(F, len(keys), N, cols))


def merge(F, *vs):
    out = {}
    for v in vs:
        F.axpy(out, F.one, v)
    return out


STAR_A = "StarA"            # _*A = {phi : phi(s_L(l) a) = l phi(a)}
A_STAR = "AStar"            # A_* = {phi : phi(t_L(l) a) = phi(a) l}
A_UPPER_STAR = "AUpperStar"  # A^* = {phi : phi(a s_R(r)) = phi(a) r}
UPPER_STAR_A = "UpperStarA"  # ^*A = {phi : phi(a t_R(r)) = r phi(a)}
DUAL_KINDS = (STAR_A, A_STAR, A_UPPER_STAR, UPPER_STAR_A)


class DualAlgebra:
    """One of the four dual algebras of a bialgebroid, with its actions.

    Elements are addressed either as functionals (vectors of length n*m) or
    by coordinates in the RREF basis of the dual space (`alg` is the
    FinAlgebra on those coordinates).
    """

    def __init__(self, bialg, which):
        if which in (STAR_A, A_STAR) and bialg.side != "left":
            raise ValueError("%s needs a left bialgebroid" % which)
        if which in (A_UPPER_STAR, UPPER_STAR_A) and bialg.side != "right":
            raise ValueError("%s needs a right bialgebroid" % which)
        self.bialg = bialg
        self.which = which
        A, B = bialg.A, bialg.B
        self.A, self.B, self.F = A, B, A.F
        self.fn = Functionals(A, B)
        F = self.F
        n, m = A.dim, B.dim
        if which == STAR_A:
            acts_A = [A.lmul(bialg.s.col(b)) for b in range(m)]
            acts_B = [B.lmul_basis(b) for b in range(m)]
        elif which == A_STAR:
            acts_A = [A.lmul(bialg.t.col(b)) for b in range(m)]
            acts_B = [B.rmul_basis(b) for b in range(m)]
        elif which == A_UPPER_STAR:
            acts_A = [A.rmul(bialg.s.col(b)) for b in range(m)]
            acts_B = [B.rmul_basis(b) for b in range(m)]
        elif which == UPPER_STAR_A:
            acts_A = [A.rmul(bialg.t.col(b)) for b in range(m)]
            acts_B = [B.lmul_basis(b) for b in range(m)]
        else:
            raise ValueError("unknown dual %r" % (which,))
        self.linearity = (acts_A, acts_B)
        fnl = self.fn

        def constraint(phi):
            out = {}
            for b in range(m):
                for a in range(n):
                    lhs = fnl.value(phi, acts_A[b].col(a))
                    rhs = acts_B[b].apply(fnl.value(phi, {a: F.one}))
                    d = merge(F, lhs, F.scale(F.neg(F.one), rhs))
                    for k, c in d.items():
                        out[(b, a, k)] = c
            return out

        self.space = functional_space(A, B, constraint)
        self.dim = self.space.dim
        self.unit_functional = fnl.from_mat(bialg.pi)
        ucoords = self.coords(self.unit_functional)
        if ucoords is None:
            raise InternalCheckFailed("counit is not in the %s dual space" % which)
        mult = [[self.coords_strict(self.product(self.basis(i), self.basis(j)))
                 for j in range(self.dim)] for i in range(self.dim)]
        self.alg = mk_algebra(F, self.dim, mult, ucoords)

    def __repr__(self):
        return "DualAlgebra(%s, dim %d)" % (self.which, self.dim)

    def basis(self, i):
        return dict(self.space.rows[i])

    def coords(self, phi):
        return self.space.coords(phi)

    def coords_strict(self, phi):
        c = self.coords(phi)
        if c is None:
            raise InternalCheckFailed("product left the %s dual space" % self.which)
        return c

    def functional(self, coords):
        return self.space.combo(coords)

    def contains(self, phi):
        return self.space.contains(phi)

    def value(self, phi, a):
        return self.fn.value(phi, a)

    # product on functionals -----------------------------------------
    def product(self, phi, psi):
        bl = self.bialg
        A, F = self.A, self.F
        fnl = self.fn
        w = self.which

        def at(a):
            out = {}
            for c, i, j in bl.lift_terms(a):
                x, y = {i: F.one}, {j: F.one}
                if w == STAR_A:      # psi(t(phi(a2)) a1)
                    arg = A.mul(bl.t.apply(fnl.value(phi, y)), x)
                    F.axpy(out, c, fnl.value(psi, arg))
                elif w == A_STAR:    # psi(s(phi(a1)) a2)
                    arg = A.mul(bl.s.apply(fnl.value(phi, x)), y)
                    F.axpy(out, c, fnl.value(psi, arg))
                elif w == A_UPPER_STAR:  # phi(a^(2) t(psi(a^(1))))
                    arg = A.mul(y, bl.t.apply(fnl.value(psi, x)))
                    F.axpy(out, c, fnl.value(phi, arg))
                else:                # phi(a^(1) s(psi(a^(2))))
                    arg = A.mul(x, bl.s.apply(fnl.value(psi, y)))
                    F.axpy(out, c, fnl.value(phi, arg))
            return out
        return fnl.from_map(at)

    def mul_coords(self, x, y):
        return self.alg.mul(x, y)

    # actions -----------------------------------------------------------
    def act_on_dual(self, a, phi):
        """A acting on the dual: phi(- a) for the lower duals, phi(a -) for the upper ones."""
        A = self.A
        if self.which in (STAR_A, A_STAR):
            return self.fn.precompose(phi, lambda x: A.mul(x, a))
        return self.fn.precompose(phi, lambda x: A.mul(a, x))

    def act_on_total(self, phi, a):
        """The dual acting on A.

        StarA: a <- phi = t(phi(a2)) a1      AStar: a <- phi = s(phi(a1)) a2
        AUpperStar: phi -> a = a^(2) t(phi(a^(1)))
        UpperStarA: phi -> a = a^(1) s(phi(a^(2)))
        """
        bl = self.bialg
        A, F = self.A, self.F
        fnl = self.fn
        out = {}
        w = self.which
        for c, i, j in bl.lift_terms(a):
            x, y = {i: F.one}, {j: F.one}
            if w == STAR_A:
                term = A.mul(bl.t.apply(fnl.value(phi, y)), x)
            elif w == A_STAR:
                term = A.mul(bl.s.apply(fnl.value(phi, x)), y)
            elif w == A_UPPER_STAR:
                term = A.mul(y, bl.t.apply(fnl.value(phi, x)))
            else:
                term = A.mul(x, bl.s.apply(fnl.value(phi, y)))
            F.axpy(out, c, term)
        return out

    # inclusions of the base ---------------------------------------------
    def inclusions(self):
        """The two base inclusions as lists of functionals (one per base basis element)."""
        bl = self.bialg
        A, B, F = self.A, self.B, self.F
        fnl = self.fn
        pi = bl.pi
        m = B.dim
        w = self.which
        out1, out2 = [], []
        for b in range(m):
            eb = {b: F.one}
            if w == STAR_A:
                f1 = lambda a: B.mul(pi.apply(a), eb)
                f2 = lambda a: pi.apply(A.mul(a, bl.s.apply(eb)))
            elif w == A_STAR:
                f1 = lambda a: B.mul(eb, pi.apply(a))
                f2 = lambda a: pi.apply(A.mul(a, bl.t.apply(eb)))
            elif w == A_UPPER_STAR:
                f1 = lambda a: B.mul(eb, pi.apply(a))
                f2 = lambda a: pi.apply(A.mul(bl.s.apply(eb), a))
            else:
                f1 = lambda a: B.mul(pi.apply(a), eb)
                f2 = lambda a: pi.apply(A.mul(bl.t.apply(eb), a))
            out1.append(fnl.from_map(f1))
            out2.append(fnl.from_map(f2))
        return out1, out2

    def evaluate_at_one(self, phi):
        return self.fn.value(phi, self.A.unit)


def dual_algebra(bialg, which):
    return DualAlgebra(bialg, which)


def dual_action(dual, kind, x, y):
    """kind "on_dual": x in A acts on functional y; "on_total": functional x acts on y in A."""
    if kind == "on_dual":
        return dual.act_on_dual(x, y)
    if kind == "on_total":
        return dual.act_on_total(x, y)
    raise ValueError("kind must be on_dual or on_total")


# ---- sigma and chi ------------------------------------------------------------

def sigma(left, right, phi):
    """_*A -> ^*A: a -> pi_R(t_L(phi(a2)) a1)."""
    A, F = left.A, left.F
    fL = Functionals(A, left.B)
    fR = Functionals(A, right.B)

    def at(a):
        out = {}
        for c, i, j in left.lift_terms(a):
            term = A.mul(left.t.apply(fL.value(phi, {j: F.one})), {i: F.one})
            F.axpy(out, c, right.pi.apply(term))
        return out
    return fR.from_map(at)


def sigma_inv(left, right, phi):
    """^*A -> _*A: a -> pi_L(a^(1) s_R(phi(a^(2))))."""
    A, F = left.A, left.F
    fL = Functionals(A, left.B)
    fR = Functionals(A, right.B)

    def at(a):
        out = {}
        for c, i, j in right.lift_terms(a):
            term = A.mul({i: F.one}, right.s.apply(fR.value(phi, {j: F.one})))
            F.axpy(out, c, left.pi.apply(term))
        return out
    return fL.from_map(at)


def chi(left, right, phi):
    """A^* -> A_*: a -> pi_L(a^(2) t_R(phi(a^(1))))."""
    A, F = left.A, left.F
    fL = Functionals(A, left.B)
    fR = Functionals(A, right.B)

    def at(a):
        out = {}
        for c, i, j in right.lift_terms(a):
            term = A.mul({j: F.one}, right.t.apply(fR.value(phi, {i: F.one})))
            F.axpy(out, c, left.pi.apply(term))
        return out
    return fL.from_map(at)


def chi_inv(left, right, phi):
    """A_* -> A^*: a -> pi_R(s_L(phi(a1)) a2)."""
    A, F = left.A, left.F
    fL = Functionals(A, left.B)
    fR = Functionals(A, right.B)

    def at(a):
        out = {}
        for c, i, j in left.lift_terms(a):
            term = A.mul(left.s.apply(fL.value(phi, {i: F.one})), {j: F.one})
            F.axpy(out, c, right.pi.apply(term))
        return out
    return fR.from_map(at)


# ---- invariants ----------------------------------------------------------------

def check_module(A, acts):
    F = A.F
    d = acts[0].rows if acts else 0
    unit_act = Mat.zero(F, d, d)
    for i, c in A.unit.items():
        unit_act = unit_act + acts[i].scaled(c)
    if unit_act != Mat.identity(F, d):
        raise NotAModule("unit", "1 does not act as the identity")
    for i in range(A.dim):
        for j in range(A.dim):
            prod = Mat.zero(F, d, d)
            for k, c in A.mult[i][j].items():
                prod = prod + acts[k].scaled(c)
            if acts[i] @ acts[j] != prod:
                raise NotAModule((i, j))


def act_of(acts, F, d, a):
    out = Mat.zero(F, d, d)
    for k, c in a.items():
        out = out + acts[k].scaled(c)
    return out


def invariants_of_module(l, acts):
    """Inv(M) = {v : a.v = s(pi(a)).v for all a} for a left A-module given by acts[a]."""
    A, F = l.A, l.F
    check_module(A, acts)
    d = acts[0].rows
    blocks = []
    for a in range(A.dim):
        spa = l.s.apply(l.pi.col(a))
        blocks.append(acts[a] - act_of(acts, F, d, spa))
    return kernel(vstack(F, blocks))
