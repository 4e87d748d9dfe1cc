"""The intertwining operators between components of the induced modules.

Every operator here is a map M(V) -> M(V') of modules over the full algebra
that is left-U(L_-)-linear, so it is determined by the images of 1 tensor v
for v running over the source component basis.  An InducedOperator stores
exactly that image table; apply() multiplies the table through by the PBW
part of the argument.

Operator ids and their grid action (m, n are the component bidegrees):

    nabla      (X, m, n)   -> (X, m-1, n-1)    all twelve spaces
    nabla2     (A/Ap/C/Cp, m, 0) -> (B/Bp/D/Dp, m-2, 0)
    nabla3     (A/App/B/Bpp, 0, n) -> (C/Cpp/D/Dpp, 0, n-3)
    nabla4p    (A, 0, 2)   -> (D, -1, 0)
    nabla4pp   (A, 1, 0)   -> (D, 0, -2)
    nabla6     (A, 0, 1)   -> (D, 0, -1)
    nablatilde (A, 1, 1)   -> (D, -1, -1)   (nabla through the shared corner)

nabla is the contraction sum_{i,eps} d_i^eps (x) @_i @_eps; nabla2 is
sum_{i,j} d_i+ d_j- (x) @_i @_j on the z-free row; nabla3 is the product of
the three factors (d_i+ @+ + d_i- @-).  The remaining three are built out of
the degree-three letter products

    a = d1+ d2+ d3+          b = sum of the three words with one minus
    c = the three words with two minuses        dd = d1- d2- d3-

and the translation-weighted combinations hat_delta(+/-) = sum_k p_k d_k^eps.
The images of the lowest weight... rather, of the sl2-highest source monomial
are fixed by the formulas below and the rest of the table is generated by
lowering with f3 (or f1, f2), which makes equivariance in the lowering
direction definitional; equivariance for the raising operators is a theorem
and is covered by tests.
"""

from fractions import Fraction

from .linalg import SparseMatrix
from .verma import (TRIVIAL_LM, ZERO5, ModuleVector, act_g0,
                    leftmul_lmono_vec, mask_letters, pbw_normal_form,
                    rmul_letter, vmonos_of)

OPERATOR_IDS = ("nabla", "nabla2", "nabla3", "nabla4p", "nabla4pp",
                "nabla6", "nablatilde")


VM_ONE_PAIR = (ZERO5, ZERO5)


class NotDefinedHere(ValueError):
    """The requested operator does not exist at the requested source."""


class SourceMismatch(ValueError):
    """A vector fed to apply() does not live in the operator's source."""


def lm_mul(lm1, lm2, graded=False):
    """PBW product of two monomials, as dict lm -> coeff."""
    acc = {(lm1[0] + lm2[0], lm1[1] + lm2[1], lm1[2] + lm2[2], lm1[3]): 1}
    for b in mask_letters(lm2[3]):
        nxt = {}
        for lm, c in acc.items():
            for lm2x, c2 in rmul_letter(lm, b, graded).items():
                v = nxt.get(lm2x, 0) + c * c2
                if v:
                    nxt[lm2x] = v
                else:
                    del nxt[lm2x]
        acc = nxt
    return acc


def nf_mul(nf1, nf2, graded=False):
    out = {}
    for lm1, c1 in nf1.items():
        for lm2, c2 in nf2.items():
            for lm, c in lm_mul(lm1, lm2, graded).items():
                v = out.get(lm, 0) + c1 * c2 * c
                if v:
                    out[lm] = v
                else:
                    del out[lm]
    return out


def letter_products():
    """The four degree-three letter products a, b, c, dd and hat deltas."""
    words_b = [["d1-", "d2+", "d3+"], ["d1+", "d2-", "d3+"], ["d1+", "d2+", "d3-"]]
    words_c = [["d1-", "d2-", "d3+"], ["d1-", "d2+", "d3-"], ["d1+", "d2-", "d3-"]]

    def wsum(words):
        out = {}
        for w in words:
            for lm, c in pbw_normal_form(w).items():
                v = out.get(lm, 0) + c
                if v:
                    out[lm] = v
                else:
                    del out[lm]
        return out

    prods = {
        "a": pbw_normal_form(["d1+", "d2+", "d3+"]),
        "b": wsum(words_b),
        "c": wsum(words_c),
        "dd": pbw_normal_form(["d1-", "d2-", "d3-"]),
        "hat+": wsum([["p%d" % k, "d%d+" % k] for k in (1, 2, 3)]),
        "hat-": wsum([["p%d" % k, "d%d-" % k] for k in (1, 2, 3)]),
    }
    return prods


def _diff_slot(base, s):
    if base == "A":
        return True
    if base == "B":
        return s < 3
    if base == "C":
        return s >= 3
    return False


def apply_symbols(space, sym, vm):
    """Apply a symbol monomial (5-tuple of @-exponents) to a VMonomial.

    Slots realized as variables in the space are differentiated, slots
    realized as symbols are multiplied.  Returns (vm', coeff) or None.
    """
    xe, de = vm
    coeff = 1
    base = space[0]
    for s in range(5):
        k = sym[s]
        if not k:
            continue
        if _diff_slot(base, s):
            if xe[s] < k:
                return None
            c = 1
            for j in range(k):
                c *= xe[s] - j
            coeff *= c
            xe = xe[:s] + (xe[s] - k,) + xe[s + 1:]
        else:
            de = de[:s] + (de[s] + k,) + de[s + 1:]
    return (xe, de), coeff


def _esym(*slots):
    e = [0, 0, 0, 0, 0]
    for s in slots:
        e[s] += 1
    return tuple(e)


class InducedOperator:
    """A module map determined by images of 1 tensor (source basis)."""

    def __init__(self, op_id, source, target, images, ldeg_shift, graded=False):
        self.op_id = op_id
        self.source = source
        self.target = target
        self.images = images
        self.ldeg_shift = ldeg_shift
        self.graded = graded

    def apply(self, vec):
        if vec.space != self.source[0]:
            raise SourceMismatch("vector in %s, operator source %s"
                                 % (vec.space, self.source))
        out = ModuleVector(self.target[0])
        for (lm, vm), c in vec.terms.items():
            img = self.images.get(vm)
            if img is None:
                raise SourceMismatch("monomial %r outside component %r"
                                     % (vm, self.source))
            if img:
                out.add_scaled(leftmul_lmono_vec(lm, img, self.graded), c)
        return out

    def __repr__(self):
        return "InducedOperator(%s, %r -> %r)" % (self.op_id, self.source, self.target)


def _family_shift(space, base_map):
    """Replace the base letter of a SpaceId, keeping the prime suffix."""
    return base_map[space[0]] + space[1:]


def _image_from_nf(target_space, nf, vm, extra_sym=()):
    vec = ModuleVector(target_space)
    xe, de = vm
    for s in extra_sym:
        de = de[:s] + (de[s] + 1,) + de[s + 1:]
    for lm, c in nf.items():
        vec.add_term(lm, (xe, de), c)
    return vec


def build_operator(op_id, source, graded=False):
    """Construct the named operator with the given source component."""
    space, m, n = source
    if space not in ("A", "B", "C", "D", "Ap", "Bp", "Cp", "Dp",
                     "App", "Bpp", "Cpp", "Dpp"):
        raise NotDefinedHere("unknown space %r" % (space,))
    if graded and op_id not in ("nabla", "nabla2"):
        raise NotDefinedHere("%s has no graded form here" % op_id)
    vms = vmonos_of(space, m, n)

    if op_id == "nabla":
        target = (space, m - 1, n - 1)
        images = {}
        for vm in vms:
            vec = ModuleVector(space)
            for i in range(3):
                for eps, zslot in ((0, 3), (1, 4)):
                    res = apply_symbols(space, _esym(i, zslot), vm)
                    if res is not None:
                        vm2, c = res
                        vec.add_term((0, 0, 0, 1 << (i + 3 * eps)), vm2, c)
            images[vm] = vec
        return InducedOperator(op_id, source, target, images, 1, graded)

    if op_id == "nabla2":
        if n != 0 or space[0] not in ("A", "C"):
            raise NotDefinedHere("nabla2 acts on the z-free row of A or C")
        target = (_family_shift(space, {"A": "B", "C": "D"}), m - 2, 0)
        images = {}
        for vm in vms:
            vec = ModuleVector(target[0])
            for i in range(3):
                for j in range(3):
                    res = apply_symbols(space, _esym(i, j), vm)
                    if res is not None:
                        vm2, c = res
                        vec.add_term((0, 0, 0, (1 << i) | (1 << (j + 3))), vm2, c)
            images[vm] = vec
        return InducedOperator(op_id, source, target, images, 2, graded)

    if op_id == "nabla3":
        if m != 0 or space[0] not in ("A", "B"):
            raise NotDefinedHere("nabla3 acts on the x-free column of A or B")
        target = (_family_shift(space, {"A": "C", "B": "D"}), 0, n - 3)
        words = []
        for e1 in (0, 1):
            for e2 in (0, 1):
                for e3 in (0, 1):
                    word = ["d1%s" % ("-" if e1 else "+"),
                            "d2%s" % ("-" if e2 else "+"),
                            "d3%s" % ("-" if e3 else "+")]
                    sym = _esym(*([4] * (e1 + e2 + e3) + [3] * (3 - e1 - e2 - e3)))
                    words.append((pbw_normal_form(word), sym))
        images = {}
        for vm in vms:
            vec = ModuleVector(target[0])
            for nf, sym in words:
                res = apply_symbols(space, sym, vm)
                if res is not None:
                    vm2, c = res
                    for lm, c2 in nf.items():
                        vec.add_term(lm, vm2, c * c2)
            images[vm] = vec
        return InducedOperator(op_id, source, target, images, 3, graded)

    prods = letter_products()

    if op_id == "nabla4p":
        if (space, m, n) != ("A", 0, 2):
            raise NotDefinedHere("nabla4p is the single arrow (A,0,2)->(D,-1,0)")
        target = ("D", -1, 0)
        # image of z+^2: apply @+^2 then a Delta^- with the @_i landing in D
        img = ModuleVector("D")
        for k in range(3):
            for lm, c in nf_mul(prods["a"], {(0, 0, 0, 1 << (k + 3)): 1}).items():
                img.add_term(lm, (ZERO5, _esym(k)), 2 * c)
        images = {((0, 0, 0, 2, 0), ZERO5): img}
        img_pm = act_g0("f3", img).scaled(Fraction(1, 2))
        images[((0, 0, 0, 1, 1), ZERO5)] = img_pm
        images[((0, 0, 0, 0, 2), ZERO5)] = act_g0("f3", img_pm)
        return InducedOperator(op_id, source, target, images, 4, graded)

    if op_id == "nabla4pp":
        if (space, m, n) != ("A", 1, 0):
            raise NotDefinedHere("nabla4pp is the single arrow (A,1,0)->(D,0,-2)")
        target = ("D", 0, -2)
        img = ModuleVector("D")
        d1m = {(0, 0, 0, 1 << 3): 1}
        for key, sym in (("a", _esym(3, 3)), ("b", _esym(3, 4)), ("c", _esym(4, 4))):
            for lm, c in nf_mul(d1m, prods[key]).items():
                img.add_term(lm, (ZERO5, sym), c)
        images = {((1, 0, 0, 0, 0), ZERO5): img}
        img2 = act_g0("f1", img)
        images[((0, 1, 0, 0, 0), ZERO5)] = img2
        images[((0, 0, 1, 0, 0), ZERO5)] = act_g0("f2", img2)
        return InducedOperator(op_id, source, target, images, 4, graded)

    if op_id == "nabla6":
        if (space, m, n) != ("A", 0, 1):
            raise NotDefinedHere("nabla6 is the single arrow (A,0,1)->(D,0,-1)")
        target = ("D", 0, -1)
        img = ModuleVector("D")
        da = nf_mul(prods["dd"], prods["a"])
        hb = nf_mul(prods["hat-"], prods["b"])
        ha = nf_mul(prods["hat-"], prods["a"])
        for lm, c in da.items():
            img.add_term(lm, (ZERO5, _esym(4)), c)
        for lm, c in hb.items():
            img.add_term(lm, (ZERO5, _esym(4)), c)
        for lm, c in ha.items():
            img.add_term(lm, (ZERO5, _esym(3)), c)
        images = {((0, 0, 0, 1, 0), ZERO5): img,
                  ((0, 0, 0, 0, 1), ZERO5): act_g0("f3", img)}
        return InducedOperator(op_id, source, target, images, 6, graded)

    if op_id == "nablatilde":
        if (space, m, n) != ("A", 1, 1):
            raise NotDefinedHere("nablatilde is the single arrow (A,1,1)->(D,-1,-1)")
        first = build_operator("nabla", ("A", 1, 1))
        second = build_operator("nabla", ("D", 0, 0))
        images = {}
        for vm in vms:
            mid = first.apply(ModuleVector("A", {(TRIVIAL_LM, vm): 1}))
            lifted = ModuleVector("D")
            for (lm, vmx), c in mid.terms.items():
                assert vmx == VM_ONE_PAIR
                lifted.add_term(lm, vmx, c)
            images[vm] = second.apply(lifted)
        return InducedOperator(op_id, source, ("D", -1, -1), images, 2, graded)

    raise NotDefinedHere("unknown operator id %r" % (op_id,))


ELEMENTARY_IDS = ("Delta+", "Delta-", "delta1", "delta2", "delta3",
                  "sym+", "sym-", "sym1", "sym2", "sym3")


def elementary_operator(name, source, graded=False):
    """The one-letter factors of nabla, as operators on one component.

    Delta+/Delta- multiply by one letter of the given parity and apply the
    matching x-slot symbol (summed over the three slots); delta1..delta3
    fix the slot and sum over the parities against the z symbols; sym* are
    the bare symbol maps with no letter.  nabla factors as
    Delta+ sym+ + Delta- sym- and as sum_i delta_i sym_i, which is what
    the commutation relation tests exercise.
    """
    space, m, n = source
    if name not in ELEMENTARY_IDS:
        raise NotDefinedHere("unknown elementary operator %r" % (name,))
    vms = vmonos_of(space, m, n)

    def table(parts, target, shift):
        # parts: list of (letter mask or 0, symbol tuple)
        images = {}
        for vm in vms:
            vec = ModuleVector(target[0])
            for mask, sym in parts:
                res = apply_symbols(space, sym, vm)
                if res is not None:
                    vm2, c = res
                    vec.add_term((0, 0, 0, mask), vm2, c)
            images[vm] = vec
        return InducedOperator(name, source, target, images, shift, graded)

    if name in ("Delta+", "Delta-"):
        eps = 0 if name == "Delta+" else 1
        parts = [(1 << (i + 3 * eps), _esym(i)) for i in range(3)]
        return table(parts, (space, m - 1, n), 1)
    if name.startswith("delta"):
        i = int(name[5]) - 1
        parts = [(1 << i, _esym(3)), (1 << (i + 3), _esym(4))]
        return table(parts, (space, m, n - 1), 1)
    if name in ("sym+", "sym-"):
        slot = 3 if name == "sym+" else 4
        return table([(0, _esym(slot))], (space, m, n - 1), 0)
    i = int(name[3]) - 1
    return table([(0, _esym(i))], (space, m - 1, n), 0)


def operator_matrix(op, source_keys):
    """Matrix of an operator on a list of (lm, vm) source keys.

    Returns (matrix, row_index) with row_index mapping target keys to rows.
    """
    row_index = {}
    cols = []
    for (lm, vm) in source_keys:
        img = op.apply(ModuleVector(op.source[0], {(lm, vm): 1}))
        col = {}
        for key, c in img.terms.items():
            r = row_index.setdefault(key, len(row_index))
            col[r] = c
        cols.append(col)
    return SparseMatrix.from_columns(cols, len(row_index)), row_index


def compose_images(outer, inner):
    """Images of 1 tensor v under outer after inner.

    Left-U(L_-)-linearity means the composite vanishes on the whole component
    exactly when all of these images vanish.
    """
    out = {}
    for vm, img in inner.images.items():
        out[vm] = outer.apply(img)
    return out


def grid_edge(space, m, n):
    """The outgoing arrow (op_id, target_node) of a grid node, or None.

    Encodes the combined complex built from all four families: the z-free
    rows and x-free columns are rerouted through nabla2/nabla3, the five
    exceptional corner nodes through the degree 4 and 6 operators, and the
    shared corner (0,0) carries no node at all.
    """
    if space == "A":
        if m < 0 or n < 0 or (m, n) == (0, 0):
            return None
        if (m, n) == (0, 1):
            return ("nabla6", ("D", 0, -1))
        if (m, n) == (0, 2):
            return ("nabla4p", ("D", -1, 0))
        if (m, n) == (1, 0):
            return ("nabla4pp", ("D", 0, -2))
        if (m, n) == (1, 1):
            return ("nablatilde", ("D", -1, -1))
        if n == 0:
            return ("nabla2", ("B", m - 2, 0))
        if m == 0 and n >= 3:
            return ("nabla3", ("C", 0, n - 3))
        return ("nabla", ("A", m - 1, n - 1))
    if space == "B":
        if m < 0 or n > 0:
            return None
        if m == 0:
            return ("nabla3", ("D", 0, n - 3))
        return ("nabla", ("B", m - 1, n - 1))
    if space == "C":
        if m > 0 or n < 0:
            return None
        if n == 0:
            return ("nabla2", ("D", m - 2, 0))
        return ("nabla", ("C", m - 1, n - 1))
    if space == "D":
        if m > 0 or n > 0 or (m, n) == (0, 0):
            return None
        return ("nabla", ("D", m - 1, n - 1))
    return None


def grid(max_m=6, max_n=6):
    """GridMap: outgoing arrows for all nodes within the window."""
    edges = {}
    for space, sm, sn in (("A", 1, 1), ("B", 1, -1), ("C", -1, 1), ("D", -1, -1)):
        for am in range(0, max_m + 1):
            for an in range(0, max_n + 1):
                node = (space, sm * am, sn * an)
                e = grid_edge(*node)
                if e is not None:
                    edges[node] = e
    return edges


def next_upstream(space, m, n):
    """The unique grid arrow pointing into the node: (op_id, source_node)."""
    if space == "A":
        return ("nabla", ("A", m + 1, n + 1))
    if space == "B":
        if n == 0:
            return ("nabla2", ("A", m + 2, 0))
        return ("nabla", ("B", m + 1, n + 1))
    if space == "C":
        if m == 0:
            return ("nabla3", ("A", 0, n + 3))
        return ("nabla", ("C", m + 1, n + 1))
    if space == "D":
        if (m, n) == (-1, -1):
            return ("nablatilde", ("A", 1, 1))
        if (m, n) == (-1, 0):
            return ("nabla4p", ("A", 0, 2))
        if (m, n) == (0, -2):
            return ("nabla4pp", ("A", 1, 0))
        if (m, n) == (0, -1):
            return ("nabla6", ("A", 0, 1))
        if n == 0:
            return ("nabla2", ("C", m + 2, 0))
        if m == 0:
            return ("nabla3", ("B", 0, n + 3))
        return ("nabla", ("D", m + 1, n + 1))
    raise KeyError(space)
