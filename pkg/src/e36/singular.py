"""Singular and secondary singular vectors of the induced modules.

A singular vector is a nonzero weight vector of positive PBW degree killed
by every raising operator (the three sl3/sl2 simple roots together with the
two generators of the positive part).  Each degenerate module carries one,
obtained by pushing the generating monomial of a neighbouring component
through the grid operator that links them; materialize() builds them that
way and the closed forms recorded in _CLOSED_FORMS serve as an independent
route in the tests.

A secondary singular vector s is a g0-highest weight vector with nabla(s)=0
whose defects e0.s and e0'.s land in the image of the incoming grid arrow
(without s itself lying in that image).  The known examples xi, q_plus and
t_plus live at the three nodes where the homology of the grid complexes is
nonzero, and this module also constructs the companion elements (zeta, tau,
theta, kappa, lambda, r_plus/r_minus, s) that appear in the same homology
classes, since they feed several cross-identity tests.
"""

from fractions import Fraction

from .linalg import solve_in_span
from .operators import build_operator, letter_products, nf_mul
from .verma import (TRIVIAL_LM, ZERO5, ModuleVector, act, act_g0,
                    highest_weight_vectors, leftmul_letter_vec, lm_ldegree,
                    lmonos_of_ldegree, pbw_normal_form, term_degree,
                    term_weight, vmonos_of, y3_component)

SINGULAR_FAMILIES = ("cor25a", "cor25b", "cor25c", "cor25d",
                     "cor28a", "cor28b", "cor28c", "cor28d",
                     "w1", "w2", "w3", "w4", "trivial")
SECONDARY_FAMILIES = ("xi", "qplus", "tplus")


class ParamsOutOfRange(ValueError):
    """Parameters outside the regime where the family is defined."""


class VerificationReport:
    """Outcome of a singular / secondary-singular verification."""

    def __init__(self, node, passed, weight, checks):
        self.node = node
        self.passed = passed
        self.weight = weight
        self.checks = checks  # list of (name, bool)

    def __repr__(self):
        flag = "pass" if self.passed else "FAIL"
        return "VerificationReport(%r, %s, weight=%r)" % (self.node, flag, self.weight)


def _vec(space, terms):
    v = ModuleVector(space)
    for lm, vm, c in terms:
        v.add_term(lm, vm, c)
    return v


def _xz(xslot, ze):
    """VMonomial x_xslot * z+^ze0 z-^ze1 of the A realization."""
    xe = [0, 0, 0, ze[0], ze[1]]
    if xslot is not None:
        xe[xslot] += 1
    return (tuple(xe), ZERO5)


def _dsym(*slots):
    de = [0, 0, 0, 0, 0]
    for s in slots:
        de[s] += 1
    return (ZERO5, tuple(de))


_EVEN = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
_ODD = ((1, 0, 2), (0, 2, 1), (2, 1, 0))


def c_sum_ddx(parity, e1, e2, ze):
    """C_e/C_o sum of d^{e1} d^{e2} (x) x z-monomial over index permutations."""
    perms = _EVEN if parity == "e" else _ODD
    out = ModuleVector("A")
    for (i, j, k) in perms:
        word = ["d%d%s" % (i + 1, e1), "d%d%s" % (j + 1, e2)]
        for lm, c in pbw_normal_form(word).items():
            out.add_term(lm, _xz(k, ze), c)
    return out


def c_sum_ddd(parity, e1, e2, e3):
    """C_e/C_o sum of the letter products d^{e1} d^{e2} d^{e3} in U(L_-)."""
    perms = _EVEN if parity == "e" else _ODD
    out = {}
    for (i, j, k) in perms:
        word = ["d%d%s" % (i + 1, e1), "d%d%s" % (j + 1, e2), "d%d%s" % (k + 1, e3)]
        for lm, c in pbw_normal_form(word).items():
            v = out.get(lm, 0) + c
            if v:
                out[lm] = v
            else:
                del out[lm]
    return out


def zeta(i):
    """d_i^- z_+ - d_i^+ z_-  in the (0,1) component of A."""
    return _vec("A", [((0, 0, 0, 1 << (i + 2)), _xz(None, (1, 0)), 1),
                      ((0, 0, 0, 1 << (i - 1)), _xz(None, (0, 1)), -1)])


def tau(i):
    """The degree-one cycles of the (1,1) component of A."""
    j, k = (i % 3) + 1, ((i + 1) % 3) + 1
    return _vec("A", [((0, 0, 0, 1 << (j - 1)), _xz(k - 1, (0, 1)), 1),
                      ((0, 0, 0, 1 << (k + 2)), _xz(j - 1, (1, 0)), 1)])


def theta(i):
    j, k = (i % 3) + 1, ((i + 1) % 3) + 1
    out = ModuleVector("A")
    out.add_scaled(_hat_mul(k, tau(j)))
    out.add_scaled(_hat_mul(j, tau(k)), -1)
    return out


def _hat_mul(k, vec):
    out = ModuleVector(vec.space)
    for (lm, vm), c in vec.terms.items():
        hat = list(lm[:3])
        hat[k - 1] += 1
        out.add_term((hat[0], hat[1], hat[2], lm[3]), vm, c)
    return out


def t_plus():
    out = c_sum_ddx("e", "+", "+", (0, 1))
    out.add_scaled(c_sum_ddx("e", "+", "-", (1, 0)), -1)
    out.add_scaled(c_sum_ddx("o", "+", "-", (1, 0)))
    out.add_scaled(c_sum_ddx("o", "-", "+", (1, 0)), -1)
    return out


def t_minus():
    out = c_sum_ddx("e", "-", "-", (1, 0)).scaled(-1)
    out.add_scaled(c_sum_ddx("e", "-", "+", (0, 1)))
    out.add_scaled(c_sum_ddx("o", "-", "+", (0, 1)), -1)
    out.add_scaled(c_sum_ddx("o", "+", "-", (0, 1)))
    return out


def alpha(eps):
    """d_1 d_2 x_3 + d_2 d_3 x_1 + d_3 d_1 x_2 with both letters of sign eps."""
    out = ModuleVector("A")
    for (i, j, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        for lm, c in pbw_normal_form(["d%d%s" % (i, eps), "d%d%s" % (j, eps)]).items():
            out.add_term(lm, _xz(k - 1, (0, 0)), c)
    return out


def _z_shift(vec, dz):
    out = ModuleVector(vec.space)
    for (lm, (xe, de)), c in vec.terms.items():
        xe2 = xe[:3] + (xe[3] + dz[0], xe[4] + dz[1])
        out.add_term(lm, (xe2, de), c)
    return out


def s_vector():
    """The unique degree-two cycle generating the top corner of H(G_A)."""
    ap = alpha("+")
    a0 = act_g0("f3", ap)
    am = alpha("-")
    out = _z_shift(am, (2, 0))
    out.add_scaled(_z_shift(a0, (1, 1)), -1)
    out.add_scaled(_z_shift(ap, (0, 2)))
    return out.scaled(Fraction(1, 3))


def _prod_with_symbols(pairs):
    """Sum of U(L_-) products decorated with V_D symbol monomials."""
    out = ModuleVector("D")
    for nf, vm, scale in pairs:
        for lm, c in nf.items():
            out.add_term(lm, vm, scale * c)
    return out


def xi_vector():
    p = letter_products()
    pairs = []
    for key, sym in (("a", (3, 3)), ("b", (3, 4)), ("c", (4, 4))):
        for k in range(3):
            nf = nf_mul(p[key], {(0, 0, 0, 1 << (k + 3)): 1})
            pairs.append((nf, _dsym(k, *sym), 1))
    return _prod_with_symbols(pairs)


def q_plus():
    p = letter_products()
    pairs = []
    for k in range(3):
        pairs.append((nf_mul(p["a"], {(0, 0, 0, 1 << (k + 3)): 1}),
                      _dsym(k, 3), Fraction(-2, 3)))
        pairs.append((nf_mul(p["b"], {(0, 0, 0, 1 << (k + 3)): 1}),
                      _dsym(k, 4), Fraction(-1, 3)))
    return _prod_with_symbols(pairs)


def q_minus():
    p = letter_products()
    pairs = []
    for k in range(3):
        pairs.append((nf_mul(p["c"], {(0, 0, 0, 1 << k): 1}),
                      _dsym(k, 3), Fraction(1, 3)))
        pairs.append((nf_mul(p["dd"], {(0, 0, 0, 1 << k): 1}),
                      _dsym(k, 4), Fraction(2, 3)))
    return _prod_with_symbols(pairs)


def kappa(i):
    out = leftmul_letter_vec(i + 2, q_plus())
    out.add_scaled(leftmul_letter_vec(i - 1, q_minus()), -1)
    return out


def lambda_vector():
    p = letter_products()
    nf = nf_mul(p["a"], p["dd"])
    out = ModuleVector("D")
    for lm, c in nf.items():
        out.add_term(lm, (ZERO5, ZERO5), 2 * c)
    for lm, c in nf_mul(p["c"], p["hat+"]).items():
        out.add_term(lm, (ZERO5, ZERO5), c)
    return out


def r_plus():
    p = letter_products()
    return _prod_with_symbols([(nf_mul(p["a"], p["dd"]), _dsym(4), 1),
                               (nf_mul(p["a"], p["c"]), _dsym(3), 1)])


def r_minus():
    p = letter_products()
    return _prod_with_symbols([(nf_mul(p["dd"], p["b"]), _dsym(4), 1),
                               (nf_mul(p["dd"], p["a"]), _dsym(3), 1)])


def w4_vector():
    out = ModuleVector("D")
    for i in range(3):
        for lm, c in pbw_normal_form(["d1+", "d%d+" % (i + 1)]).items():
            out.add_term(lm, _dsym(i, 3), c)
        for lm, c in pbw_normal_form(["d1+", "d%d-" % (i + 1)]).items():
            out.add_term(lm, _dsym(i, 4), c)
    return out


def _mono(xe, de):
    return (tuple(xe), tuple(de))


def _push(op_id, src_node, xe, de):
    op = build_operator(op_id, src_node)
    vec = ModuleVector(src_node[0], {(TRIVIAL_LM, _mono(xe, de)): 1})
    return op.target, op.apply(vec)


def materialize(family, params=()):
    """Build the vector of the family at the given parameters.

    Returns (node, vector).  Every vector comes from pushing a generating
    monomial through the grid operator of its node, except w4 and the two
    members of the overlap component which are written out directly.
    """
    if family not in SINGULAR_FAMILIES and family not in SECONDARY_FAMILIES:
        raise KeyError(family)
    if family == "cor25a":
        p, r = params
        if p < 0 or r < 0:
            raise ParamsOutOfRange("cor25a needs p, r >= 0")
        return _push("nabla", ("A", p + 1, r + 1), [p + 1, 0, 0, r + 1, 0], ZERO5)
    if family == "cor25b":
        p, r = params
        if p < 0 or r < 1:
            raise ParamsOutOfRange("cor25b needs p >= 0, r >= 1")
        return _push("nabla", ("B", p + 1, -(r - 1)),
                     [p + 1, 0, 0, 0, 0], [0, 0, 0, 0, r - 1])
    if family == "cor25c":
        q, r = params
        if q < 1 or r < 0:
            raise ParamsOutOfRange("cor25c needs q >= 1, r >= 0")
        return _push("nabla", ("C", -(q - 1), r + 1),
                     [0, 0, 0, r + 1, 0], [0, 0, q - 1, 0, 0])
    if family == "cor25d":
        q, r = params
        if q < 1 or r < 1:
            raise ParamsOutOfRange("cor25d needs q, r >= 1")
        return _push("nabla", ("D", -(q - 1), -(r - 1)),
                     ZERO5, [0, 0, q - 1, 0, r - 1])
    if family == "cor28a":
        (p,) = params
        if p < 0:
            raise ParamsOutOfRange("cor28a needs p >= 0")
        return _push("nabla2", ("A", p + 2, 0), [p + 2, 0, 0, 0, 0], ZERO5)
    if family == "cor28b":
        (q,) = params
        if q < 2:
            raise ParamsOutOfRange("cor28b needs q >= 2")
        return _push("nabla2", ("C", -(q - 2), 0), ZERO5, [0, 0, q - 2, 0, 0])
    if family == "cor28c":
        (r,) = params
        if r < 0:
            raise ParamsOutOfRange("cor28c needs r >= 0")
        return _push("nabla3", ("A", 0, r + 3), [0, 0, 0, r + 3, 0], ZERO5)
    if family == "cor28d":
        (r,) = params
        if r < 3:
            raise ParamsOutOfRange("cor28d needs r >= 3")
        return _push("nabla3", ("B", 0, -(r - 3)), ZERO5, [0, 0, 0, 0, r - 3])
    if family == "w1":
        node, vec = _push("nabla4p", ("A", 0, 2), [0, 0, 0, 2, 0], ZERO5)
        return node, vec.scaled(Fraction(1, 2))
    if family == "w2":
        return _push("nabla4pp", ("A", 1, 0), [1, 0, 0, 0, 0], ZERO5)
    if family == "w3":
        return _push("nabla6", ("A", 0, 1), [0, 0, 0, 1, 0], ZERO5)
    if family == "w4":
        return ("D", -1, -1), w4_vector()
    if family == "trivial":
        return ("A", 0, 0), _vec("A", [((0, 0, 0, 1), _mono(ZERO5, ZERO5), 1)])
    if family == "xi":
        return ("D", -1, -2), xi_vector()
    if family == "qplus":
        return ("D", -1, -1), q_plus()
    if family == "tplus":
        return ("A", 1, 1), t_plus()
    raise KeyError(family)


_RAISING = ("e1", "e2", "e3", "e0", "e0p")


def verify_singular(node, vec):
    """Check that vec is a positive-degree highest weight vector."""
    checks = [("nonzero", bool(vec))]
    w = vec.weight()
    checks.append(("weight_vector", w is not None))
    degs = {term_degree(vec.space, lm, vm) for (lm, vm) in vec.terms}
    checks.append(("positive_degree",
                   len(degs) == 1 and bool(vec) and degs.pop() > -y3_component(*node)))
    for g in _RAISING:
        checks.append((g, not act(g, vec)))
    return VerificationReport(node, all(ok for _, ok in checks), w, checks)


def component_keys_at_degree(node, degree):
    """Basis keys of the node component at one -3Y degree."""
    space, m, n = node
    ldeg = degree + y3_component(space, m, n)
    if ldeg < 0:
        return []
    keys = []
    vms = vmonos_of(space, m, n)
    for lm in lmonos_of_ldegree(ldeg):
        for vm in vms:
            keys.append((lm, vm))
    return keys


def in_image(op, vec):
    """Membership of vec in op(full source component), blockwise.

    The operators preserve the -3Y grading and the g0-weight, so only the
    matching block of the source needs to be pushed through.
    """
    if not vec:
        return True
    w = vec.weight()
    if w is None:
        raise ValueError("not a weight vector")
    deg = {term_degree(vec.space, lm, vm) for (lm, vm) in vec.terms}
    if len(deg) != 1:
        raise ValueError("not homogeneous")
    deg = deg.pop()
    cols = []
    row_index = {}
    target = {}
    for key, c in vec.terms.items():
        target[row_index.setdefault(key, len(row_index))] = c
    src_space = op.source[0]
    for key in component_keys_at_degree(op.source, deg):
        if term_weight(src_space, key[0], key[1]) != w:
            continue
        img = op.apply(ModuleVector(src_space, {key: 1}))
        col = {}
        for k2, c in img.terms.items():
            col[row_index.setdefault(k2, len(row_index))] = c
        cols.append(col)
    return solve_in_span(cols, target, len(row_index)) is not None


def verify_secondary(node, vec, incoming):
    """Check the defining conditions of a secondary singular vector.

    The conditions live at the level of the homology class: the vector is a
    weight cycle outside the image of the incoming grid arrow, and every
    raising defect falls inside that image.  (Some defects vanish on the
    nose; the checks record which.)
    """
    checks = [("nonzero", bool(vec))]
    w = vec.weight()
    checks.append(("weight_vector", w is not None))
    out_edge = build_operator("nabla", node)
    checks.append(("nabla_kills", not out_edge.apply(vec)))
    for g in _RAISING:
        gv = act(g, vec)
        checks.append((g + "_defect_in_image",
                       (not gv) or in_image(incoming, gv)))
    checks.append(("not_in_image", not in_image(incoming, vec)))
    return VerificationReport(node, all(ok for _, ok in checks), w, checks)


def exhaustive_scan(space, m, n, max_ldegree, dominant_only=True):
    """All positive-degree singular vectors of a component, up to truncation.

    Returns a list of (weight, vector).  The weight-zero-depth generator of
    the component is excluded; everything else in the joint kernel of the
    raising operators is returned.
    """
    if not vmonos_of(space, m, n):
        raise ParamsOutOfRange("empty component %r" % ((space, m, n),))
    found = []
    for vec in highest_weight_vectors(space, m, n, max_ldegree,
                                      include_gplus=True,
                                      dominant_only=dominant_only):
        if all(lm_ldegree(lm) > 0 for (lm, _) in vec.terms):
            found.append((vec.weight(), vec))
    return found
