"""Frobenius and quasi-Frobenius decisions for the four base extensions."""
import itertools
import random

from .errors import EquivalenceViolated, InternalCheckFailed
from .exactla import Mat, Subspace, Equations, det, inverse, kernel
from .algebra import HOM, ANTI
from .bimodtensor import descend_factor_action
from .bialgebroid import Functionals, functional_space, A_UPPER_STAR, UPPER_STAR_A
from .coring import apply_right_factor
from .integrals import (integral_space, L_IN, R_IN, L_ON_SSTAR, L_ON_STARA, R_ON_STAR, R_ON_LOWER)

EXTENSIONS = ("s_R", "t_R", "s_L", "t_L")
LEFT_QF, RIGHT_QF = "LeftQF", "RightQF"

# tensor over each extension: (right action on first factor, left action on second)
_EXT_TENSOR = {"s_R": ("rsR", "lsR"), "t_R": ("rtR", "ltR"), "s_L": ("rsL", "lsL"), "t_L": ("rtL", "ltL")}


class Undecided(Exception):
    """The randomized non-degeneracy search found nothing; not a NO."""

    def __init__(self, d, trials, evidence=None):
        self.d = d
        self.trials = trials
        self.evidence = evidence or {}
        super().__init__("undecided: dim L(A) = %d, %d random trials all degenerate" % (d, trials))


def _ext(h, name):
    """(matrix, base algebra, variance) of an extension."""
    return {"s_R": (h.sR, h.R, HOM), "t_R": (h.tR, h.R, ANTI),
            "s_L": (h.sL, h.L, HOM), "t_L": (h.tL, h.L, ANTI)}[name]


def bimodular_functionals(h, ext):
    """Hom_{B-B}(A, B) for the extension, as a Subspace of functionals."""
    A, F = h.A, h.F
    f, B, var = _ext(h, ext)
    fn = Functionals(A, B)
    m = B.dim
    neg = F.neg(F.one)

    def cons(phi):
        out = {}
        for r in range(m):
            fr = f.col(r)
            L, R = B.lmul_basis(r), B.rmul_basis(r)
            if var == ANTI:
                L, R = R, L
            for a in range(A.dim):
                ea = {a: F.one}
                val = fn.value(phi, ea)
                d1 = fn.value(phi, A.mul(fr, ea))
                F.axpy(d1, neg, L.apply(val))
                d2 = fn.value(phi, A.mul(ea, fr))
                F.axpy(d2, neg, R.apply(val))
                for k, c in d1.items():
                    out[("l", r, a, k)] = c
                for k, c in d2.items():
                    out[("r", r, a, k)] = c
        return out
    return functional_space(A, B, cons)


class FrobeniusSystem:
    """(psi, sum_i u_i (x) v_i) for one extension, verified on construction."""

    def __init__(self, h, ext, psi, element):
        self.h = h
        self.ext = ext
        self.psi = psi          # functional A -> base
        self.element = element  # ambient vector of A (x) A (a lift)
        self.checks = verify_frobenius_system(h, ext, psi, element)

    def to_json(self):
        F = self.h.F
        f, B, _ = _ext(self.h, self.ext)
        n = self.h.A.dim
        return {"extension": self.ext,
                "psi": Functionals(self.h.A, B).to_mat(self.psi).to_json(),
                "casimir_lift": [F.to_json(self.element.get(i, F.zero)) for i in range(n * n)],
                "verified": self.checks}


def verify_frobenius_system(h, ext, psi, element):
    A, F = h.A, h.F
    n = A.dim
    f, B, var = _ext(h, ext)
    fn = Functionals(A, B)
    checks = {}
    bim = bimodular_functionals(h, ext)
    checks["psi_bimodular"] = bim.contains(psi)
    terms = [(c, divmod(k, n)) for k, c in element.items()]
    left_ok = right_ok = True
    for a in range(n):
        ea = {a: F.one}
        s1, s2 = {}, {}
        for c, (x, y) in terms:
            ex, ey = {x: F.one}, {y: F.one}
            F.axpy(s1, c, A.mul(f.apply(fn.value(psi, A.mul(ea, ex))), ey))
            F.axpy(s2, c, A.mul(ex, f.apply(fn.value(psi, A.mul(ey, ea)))))
        left_ok &= s1 == ea
        right_ok &= s2 == ea
    checks["f(psi(a u_i)) v_i = a"] = left_ok
    checks["u_i f(psi(v_i a)) = a"] = right_ok
    if not all(checks.values()):
        raise InternalCheckFailed("Frobenius system for %s fails: %r" % (ext, checks))
    return checks


class FrobeniusVerdict:
    def __init__(self, frobenius, ell=None, lambda_star=None, systems=None, rank_one=None, evidence=None):
        self.frobenius = frobenius
        self.ell = ell
        self.lambda_star = lambda_star
        self.systems = systems or {}
        self.rank_one = rank_one
        self.evidence = evidence or {}

    def to_json(self, h):
        F = h.F
        n = h.A.dim
        out = {"verdict": "Frobenius" if self.frobenius else "NotFrobenius", "evidence": self.evidence}
        if self.frobenius:
            out["nondegenerate_integral"] = [F.to_json(self.ell.get(i, F.zero)) for i in range(n)]
            out["lambda_star"] = Functionals(h.A, h.R).to_mat(self.lambda_star).to_json()
            out["systems"] = {k: v.to_json() for k, v in sorted(self.systems.items())}
            out["rank_one"] = self.rank_one
        return out


def _frobenius_maps(h):
    """Matrices of phi -> phi -> l on A^* and on ^*A, linear in l, one per basis integral."""
    A, F = h.A, h.F
    n = A.dim
    Du, Ud = h.dual(A_UPPER_STAR), h.dual(UPPER_STAR_A)
    Lsp = integral_space(h, L_IN)
    Ms, Ns = [], []
    for l in Lsp.elements():
        Ms.append(Mat(F, n, Du.dim, [Du.act_on_total(Du.basis(j), l) for j in range(Du.dim)]))
        Ns.append(Mat(F, n, Ud.dim, [Ud.act_on_total(Ud.basis(j), l) for j in range(Ud.dim)]))
    return Du, Ud, Lsp, Ms, Ns


def _combo(F, mats, x):
    out = Mat.zero(F, mats[0].rows, mats[0].cols)
    for M, c in zip(mats, x):
        if c:
            out = out + M.scaled(c)
    return out


def frobenius_decide(h, seed=0, trials=32):
    key = ("frobenius", seed, trials)
    return h.cached(key, lambda: _frobenius(h, seed, trials))


def _frobenius(h, seed, trials):
    A, F = h.A, h.F
    n = A.dim
    Du, Ud, Lsp, Ms, Ns = _frobenius_maps(h)
    d = Lsp.dim
    if Du.dim != n or Ud.dim != n:
        return FrobeniusVerdict(False, evidence={"method": "dimension", "dim A": n,
                                                 "dim A^*": Du.dim, "dim ^*A": Ud.dim})
    if d == 0:
        return FrobeniusVerdict(False, evidence={"method": "no_integrals", "dim L(A)": 0})
    deg = 2 * n   # det F^*(l) * det ^*F(l) has degree <= 2n

    def value(x):
        return F.mul(det(_combo(F, Ms, x)), det(_combo(F, Ns, x)))

    size = F.size()
    found = None
    if size is not None and size <= deg and size ** d <= 200000:
        method = "exhaustive"
        pts = itertools.product(range(size), repeat=d)
        count = 0
        for x in pts:
            count += 1
            x = [F(v) for v in x]
            if any(x) and value(x):
                found = x
                break
        evidence = {"method": method, "points": count, "dim L(A)": d}
    elif d <= 2 and (size is None or size > deg):
        method = "grid"
        S = F.elements(deg + 1)
        count = 0
        for x in sorted(itertools.product(S, repeat=d), key=lambda p: [_height(F, v) for v in p]):
            count += 1
            if value(list(x)):
                found = list(x)
                break
        evidence = {"method": method, "points": count, "grid_side": deg + 1, "degree_bound": deg,
                    "dim L(A)": d}
    else:
        method = "random"
        rng = random.Random(seed)
        for t in range(trials):
            if size is None:
                x = [F(rng.randint(-10 ** 6, 10 ** 6)) for _ in range(d)]
            else:
                x = [F(rng.randrange(size)) for _ in range(d)]
            if value(x):
                found = x
                break
        evidence = {"method": method, "seed": seed, "trials": trials, "dim L(A)": d}
        if found is None:
            raise Undecided(d, trials, evidence)
    if found is None:
        return FrobeniusVerdict(False, evidence=evidence)
    evidence["point"] = [F.to_json(c) for c in found]
    ell = Lsp.basis.combo({i: c for i, c in enumerate(found) if c})
    return _frobenius_certificate(h, ell, _combo(F, Ms, found), evidence, Du)


def _height(F, v):
    if F.size() is not None:
        return int(v)
    return abs(v.numerator) + abs(v.denominator)


def _frobenius_certificate(h, ell, Fstar, evidence, Du):
    A, F = h.A, h.F
    n = A.dim
    inv = inverse(Fstar)
    lam = Du.functional(inv.apply(A.unit))
    if not integral_space(h, L_ON_SSTAR).contains(lam):
        raise InternalCheckFailed("F^*^-1(1) is not a left s-integral")
    fR = Functionals(A, h.R)
    fL = Functionals(A, h.L)
    systems = {}
    e_sR = apply_right_factor(F, h.S.apply, h.right.gamma_lift.apply(ell), n, n)
    systems["s_R"] = FrobeniusSystem(h, "s_R", lam, e_sR)
    psi_tL = fL.from_map(lambda a: h.piL.apply(h.sR.apply(fR.value(lam, a))))
    systems["t_L"] = FrobeniusSystem(h, "t_L", psi_tL, e_sR)
    Sinv = h.S_inv()
    if Sinv is not None:
        psi_sL = fL.precompose(psi_tL, Sinv.apply)
        e_sL = {}
        for k, c in e_sR.items():
            x, y = divmod(k, n)
            Sx, Sy = h.S.col(x), h.S.col(y)
            for i, a in Sy.items():
                for j, b in Sx.items():
                    e_sL[i * n + j] = F.add(e_sL.get(i * n + j, F.zero), F.mul(c, F.mul(a, b)))
        e_sL = {k: v for k, v in e_sL.items() if v}
        systems["s_L"] = FrobeniusSystem(h, "s_L", psi_sL, e_sL)
        psi_tR = fR.from_map(lambda a: h.piR.apply(h.sL.apply(fL.value(psi_sL, a))))
        systems["t_R"] = FrobeniusSystem(h, "t_R", psi_tR, e_sL)
    # rank one: l -> lam(s_L(l) -) is an isomorphism L -> L(A^*)
    Lss = integral_space(h, L_ON_SSTAR).basis
    cols = []
    for l in range(h.L.dim):
        img = fR.precompose(lam, lambda x, l=l: A.mul(h.sL.col(l), x))
        c = Lss.coords(img)
        if c is None:
            raise InternalCheckFailed("lam(s_L(l) -) left L(A^*)")
        cols.append(c)
    M = Mat(F, Lss.dim, h.L.dim, cols)
    rank_one = {"dim L": h.L.dim, "dim L(A^*)": Lss.dim,
                "isomorphism": M.rows == M.cols and inverse(M) is not None}
    if not rank_one["isomorphism"]:
        raise InternalCheckFailed("L(A^*) is not free of rank one on lambda^*")
    return FrobeniusVerdict(True, ell, lam, systems, rank_one, evidence)


# ---- quasi-Frobenius --------------------------------------------------------------

class QFVerdict:
    def __init__(self, side, extension, result, certificate, theorem_result, lemma_result):
        self.side = side
        self.extension = extension
        self.result = result
        self.certificate = certificate
        self.theorem_result = theorem_result
        self.lemma_result = lemma_result

    def to_json(self):
        return {"side": self.side, "extension": self.extension, "result": self.result,
                "span_criterion": self.theorem_result, "lemma_criterion": self.lemma_result,
                "certificate": self.certificate}


def _span_test(F, dim, vecs, target):
    """Is target in span(vecs)?  Returns (bool, span Subspace, coefficients or None)."""
    sp = Subspace.span(F, dim, [v for _, v in vecs])
    if not sp.contains(target):
        return False, sp, None
    cols = [v for _, v in vecs]
    M = Mat(F, dim, len(cols), cols)
    from .exactla import solve_affine
    x, _ = solve_affine(M, dict(target))
    return True, sp, x


# (side, extension) -> (integral space, dual space, base, use S^-1)
_QF_THEOREM = {
    (LEFT_QF, "s_R"): (L_IN, L_ON_SSTAR, "R", False), (LEFT_QF, "t_L"): (L_IN, L_ON_SSTAR, "R", False),
    (RIGHT_QF, "s_L"): (R_IN, R_ON_STAR, "L", False), (RIGHT_QF, "t_R"): (R_IN, R_ON_STAR, "L", False),
    (RIGHT_QF, "s_R"): (R_IN, R_ON_LOWER, "L", True), (RIGHT_QF, "t_L"): (R_IN, R_ON_LOWER, "L", True),
    (LEFT_QF, "s_L"): (L_IN, L_ON_STARA, "R", True), (LEFT_QF, "t_R"): (L_IN, L_ON_STARA, "R", True),
}


def _theorem_criterion(h, side, ext):
    A, F = h.A, h.F
    ispace, dspace, base, use_inv = _QF_THEOREM[(side, ext)]
    B = h.R if base == "R" else h.L
    Smap = h.S
    if use_inv:
        Smap = h.S_inv()
        if Smap is None:
            return None, {"note": "antipode not bijective; criterion unavailable"}
    fn = Functionals(A, B)
    ints = integral_space(h, ispace).elements()
    funcs = integral_space(h, dspace).elements()
    vals = []
    for i, l in enumerate(ints):
        Sl = Smap.apply(l)
        for j, lam in enumerate(funcs):
            vals.append(((i, j), fn.value(lam, Sl)))
    ok, sp, coeffs = _span_test(F, B.dim, vals, B.unit)
    cert = {"criterion": "%s(%s(%s))" % (dspace, "S^-1" if use_inv else "S", ispace)}
    if ok:
        pairs = []
        for k, ((i, j), _) in enumerate(vals):
            c = coeffs.get(k)
            if c:
                pairs.append({"integral": [F.to_json(x) for x in _dense(F, ints[i], A.dim)],
                              "functional": fn.to_mat(F_scale(F, c, funcs[j])).to_json()})
        cert["pairs"] = pairs
    else:
        cert["span_basis"] = sp.to_json()
        cert["excluded_target"] = [F.to_json(x) for x in _dense(F, B.unit, B.dim)]
    return ok, cert


def F_scale(F, c, v):
    return {k: F.mul(c, x) for k, x in v.items()}


def _dense(F, v, n):
    return [v.get(i, F.zero) for i in range(n)]


def _module_projective(h, ext, side):
    """Is A f.g. projective as a left (side LEFT_QF) or right module over the extension?"""
    A, F = h.A, h.F
    n = A.dim
    f, B, var = _ext(h, ext)
    m = B.dim
    fn = Functionals(A, B)
    neg = F.neg(F.one)
    left = side == LEFT_QF

    def cons(phi):
        out = {}
        for r in range(m):
            fr = f.col(r)
            act = B.lmul_basis(r) if (var == HOM) == left else B.rmul_basis(r)
            for a in range(n):
                ea = {a: F.one}
                arg = A.mul(fr, ea) if left else A.mul(ea, fr)
                dd = fn.value(phi, arg)
                F.axpy(dd, neg, act.apply(fn.value(phi, ea)))
                for k, c in dd.items():
                    out[(r, a, k)] = c
        return out
    H = functional_space(A, B, cons)
    hd = H.dim
    # a = sum_j f(beta_j(a)) e_j (left) or sum_j e_j f(beta_j(a)) (right); beta_j = sum_p x_{j,p} H_p
    vals = [[fn.value(H.rows[p], {a: F.one}) for a in range(n)] for p in range(hd)]
    eqs = Equations(F, n * hd)
    for j in range(n):
        ej = {j: F.one}
        for p in range(hd):
            for a in range(n):
                fv = f.apply(vals[p][a])
                term = A.mul(fv, ej) if left else A.mul(ej, fv)
                for k, c in term.items():
                    eqs.add_form((a, k), {j * hd + p: c})
    for a in range(n):
        for k in range(n):
            eqs.set_rhs((a, k), F.one if a == k else F.zero)
    return eqs.solve() is not None


def _lemma_criterion(h, side, ext):
    A, F = h.A, h.F
    n = A.dim
    f, B, var = _ext(h, ext)
    fn = Functionals(A, B)
    if not _module_projective(h, ext, side):
        return False, {"projective": False}
    T = h.tensor(*_EXT_TENSOR[ext])
    La = [descend_factor_action(T, A.lmul_basis(a), 1) for a in range(n)]
    Ra = [descend_factor_action(T, A.rmul_basis(a), 2) for a in range(n)]
    from .exactla import vstack
    C = kernel(vstack(F, [La[a] - Ra[a] for a in range(n)]))
    psis = [dict(r) for r in bimodular_functionals(h, ext).rows]
    vals = []
    for p, e in enumerate(C.rows):
        lift = T.sect_vec(e)
        for q, psi in enumerate(psis):
            out = {}
            for k, c in lift.items():
                x, y = divmod(k, n)
                ex, ey = {x: F.one}, {y: F.one}
                if side == LEFT_QF:
                    F.axpy(out, c, A.mul(ex, f.apply(fn.value(psi, ey))))
                else:
                    F.axpy(out, c, A.mul(f.apply(fn.value(psi, ex)), ey))
            vals.append(((p, q), out))
    ok, sp, coeffs = _span_test(F, n, vals, A.unit)
    cert = {"projective": True, "casimir_dim": C.dim, "bimodular_functionals_dim": len(psis)}
    if ok:
        system = []
        for k, ((p, q), _) in enumerate(vals):
            c = coeffs.get(k)
            if c:
                lift = T.sect_vec(C.rows[p])
                system.append({"psi": fn.to_mat(F_scale(F, c, psis[q])).to_json(),
                               "casimir_lift": [F.to_json(x) for x in _dense(F, lift, n * n)]})
        cert["qf_system"] = system
    else:
        cert["span_basis"] = sp.to_json()
        cert["excluded_target"] = [F.to_json(x) for x in _dense(F, A.unit, n)]
    return ok, cert


def qf_decide(h, side, extension):
    if side not in (LEFT_QF, RIGHT_QF) or extension not in EXTENSIONS:
        raise ValueError("bad QF query %r %r" % (side, extension))
    return h.cached(("qf", side, extension), lambda: _qf(h, side, extension))


def _qf(h, side, ext):
    t_ok, t_cert = _theorem_criterion(h, side, ext)
    l_ok, l_cert = _lemma_criterion(h, side, ext)
    if t_ok is not None and t_ok != l_ok:
        raise EquivalenceViolated("QF %s %s: span criterion %s, lemma criterion %s"
                                  % (side, ext, t_ok, l_ok))
    return QFVerdict(side, ext, l_ok, {"span": t_cert, "lemma": l_cert}, t_ok, l_ok)


def qf_report(h):
    """All eight (side, extension) verdicts; leftQF/rightQF refer to s_L: L -> A."""
    verdicts = [qf_decide(h, side, ext) for side in (LEFT_QF, RIGHT_QF) for ext in EXTENSIONS]
    return {"leftQF": qf_decide(h, LEFT_QF, "s_L").result,
            "rightQF": qf_decide(h, RIGHT_QF, "s_L").result,
            "verdicts": [v.to_json() for v in verdicts]}
