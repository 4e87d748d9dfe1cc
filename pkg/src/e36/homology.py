"""Homology of the letter complexes and of the induced-module grid.

Two kinds of complexes appear.  The letter complexes live on
Lambda(letters) (x) V: the associated graded of an induced module for the
PBW filtration splits off the translations as S (x) Lambda(letters) (x) V,
and the translation-free part is finite-dimensional in each bidegree,
with the graded form of nabla as differential (nabla2 on the z-free row
of the joined complexes).  The circle variants restrict to the kernel of
nabla2 on the A/C side and pass to its cokernel on the B/D side; these
are the complexes whose homology the (a, b) block tables describe.  The
module complexes are the honest induced modules, either one family at a
time, joined in pairs, or the full four-family grid; every operator
preserves the -3Y degree, so their homology is computed one degree at a
time, exactly, with the truncation only bounding how far we look.

Every node of every complex here has at most one incoming and one
outgoing arrow.  Homology at a node is ker(out)/im(in), computed block
by block over g0-weights.  The g0 content of a subquotient is read off
by counting highest weight vectors (vectors whose e1/e2/e3 images land
in the subspace being quotiented out); a dimension audit raises
InconsistentDecomposition if the multiplicities do not add up.
"""

from fractions import Fraction

from .linalg import SparseMatrix
from .operators import (build_operator, compose_images, grid_edge,
                        next_upstream, operator_matrix)
from .verma import (ModuleVector, act_g0, component_basis,
                    lmonos_of_ldegree, series_label, term_weight,
                    vmonos_of, y3_component)

FAMILY_IDS = ("G", "Go", "Gab", "GrM", "M", "BigM")

DEFAULT_WINDOW = ((-6, 6), (-6, 6))
DEFAULT_TRUNC = 8


class CompositionNotZero(ValueError):
    """Two consecutive arrows of a would-be complex do not compose to zero."""


class InconsistentDecomposition(ValueError):
    """Highest weight counting does not account for the full dimension."""


class ComplexSpec:
    """Which complex to build.

    family "G":    Lambda (x) V with graded nabla; space may be a single
                   family or a join ("AB", "CD"), where the z-free row of
                   the first factor maps through graded nabla2 instead.
    family "Go":   the circle variant of one family: on A/C the node at
                   n=0 has nabla2 as its outgoing (kernel-defining) map,
                   on B/D it has nabla2 as its incoming map (cokernel).
    family "Gab":  one (a, b) block of the circle variant, where a counts
                   plus letters plus the z+ degree (minus the @+ degree)
                   and b the same with minus letters and z-.
    family "GrM":  S (x) Lambda (x) V with graded operators, degreewise.
    family "M":    the induced modules themselves (space may be a join).
    family "BigM": the full grid with the corner (0,0) boxes removed and
                   the five exceptional corner arrows in place.

    Positions outside the window raise; empty components inside it give
    zero.  trunc bounds the -3Y degree for the module families.
    """

    __slots__ = ("family", "space", "a", "b", "window", "trunc")

    def __init__(self, family, space=None, a=None, b=None, window=None,
                 trunc=None):
        if family != "BigM" and "_" in family:
            family, tail = family.split("_", 1)
            space = space if space is not None else tail
        if family not in FAMILY_IDS:
            raise ValueError("unknown complex family %r" % (family,))
        if family == "BigM":
            space = None
        else:
            allowed = ("A", "B", "C", "D")
            if family in ("G", "M"):
                allowed += ("AB", "CD")
            if space not in allowed:
                raise ValueError("family %s cannot be built on space %r"
                                 % (family, space))
        if family == "Gab":
            if a is None or b is None:
                raise ValueError("family Gab needs the (a, b) block")
        elif a is not None or b is not None:
            raise ValueError("(a, b) blocks only apply to family Gab")
        self.family = family
        self.space = space
        self.a = a
        self.b = b
        self.window = window if window is not None else DEFAULT_WINDOW
        self.trunc = trunc

    def __repr__(self):
        bits = [self.family]
        if self.space:
            bits.append(self.space)
        if self.a is not None:
            bits.append("(%d,%d)" % (self.a, self.b))
        return "ComplexSpec(%s)" % ", ".join(bits)


def _quadrant_ok(space, m, n):
    if space == "A":
        return m >= 0 and n >= 0
    if space == "B":
        return m >= 0 and n <= 0
    if space == "C":
        return m <= 0 and n >= 0
    if space == "D":
        return m <= 0 and n <= 0
    raise KeyError(space)


def _nodes_for(spec):
    (m0, m1), (n0, n1) = spec.window
    if spec.family == "BigM":
        spaces = ("A", "B", "C", "D")
    elif spec.space in ("AB", "CD"):
        spaces = tuple(spec.space)
    else:
        spaces = (spec.space,)
    nodes = []
    for sp in spaces:
        for m in range(m0, m1 + 1):
            for n in range(n0, n1 + 1):
                if not _quadrant_ok(sp, m, n):
                    continue
                if (spec.family == "BigM" and (m, n) == (0, 0)
                        and sp in ("A", "D")):
                    # the shared corner carries no node
                    continue
                nodes.append((sp, m, n))
    return tuple(nodes)


def _edges_for(spec, node):
    """Outgoing op id and incoming (op id, source node) list of a node."""
    sp, m, n = node
    fam = spec.family
    if fam == "BigM":
        e = grid_edge(sp, m, n)
        out = e[0] if e is not None else None
        op, src = next_upstream(sp, m, n)
        back = grid_edge(*src)
        ins = [(op, src)] if back == (op, node) else []
        return out, ins
    circ = fam in ("Go", "Gab")
    joined = spec.space in ("AB", "CD")
    if circ or joined:
        if sp in ("A", "C"):
            out = "nabla" if n >= 1 else "nabla2"
            ins = ([("nabla", (sp, m + 1, n + 1))]
                   if _quadrant_ok(sp, m + 1, n + 1) else [])
            return out, ins
        if n == 0:
            partner = "A" if sp == "B" else "C"
            ins = ([("nabla2", (partner, m + 2, 0))]
                   if _quadrant_ok(partner, m + 2, 0) else [])
            return "nabla", ins
    ins = ([("nabla", (sp, m + 1, n + 1))]
           if _quadrant_ok(sp, m + 1, n + 1) else [])
    return "nabla", ins


def _ab_block(key):
    """(a, b) of a hat-free basis key: letter counts shifted by z degrees."""
    lm, (xe, de) = key
    a = (lm[3] & 7).bit_count() + xe[3] - de[3]
    b = (lm[3] >> 3).bit_count() + xe[4] - de[4]
    return (a, b)


def module_label(node):
    """(p, q, r, y) of the irreducible top of the module at a grid node."""
    sp, m, n = node
    p, q, r = series_label(sp, m, n)
    return (p, q, r, Fraction(y3_component(sp, m, n), 3))


# ---------------------------------------------------------------------------
# g0 content of a subquotient
# ---------------------------------------------------------------------------

# weight shifts of the raising generators (h1, h2, h3, 3Y)
_E_ALPHA = ((2, -1, 0, 0), (-1, 2, 0, 0), (0, 0, 2, 0))


def _g0_dim(label):
    p, q, r = label[:3]
    return (p + 1) * (q + 1) * (p + q + 2) * (r + 1) // 2


def g0_decompose(space, blocks, kernels=None, images=None, graded=False,
                 raising=("e1", "e2", "e3")):
    """Multiset of g0 labels of span(kernels)/span(images).

    blocks maps a weight (h1, h2, h3, 3Y) to the list of basis keys of
    that weight; all keys must belong to one component and one -3Y degree
    so that the raising operators stay inside ``blocks``.  kernels maps a
    weight to coefficient vectors (sparse dicts over the block indices);
    None means the whole block.  images, in the same format, must span a
    raising-stable subspace of the kernels' span.  Returns a dict
    (p, q, r, y) -> multiplicity and raises InconsistentDecomposition if
    the multiplicities do not sum to the subquotient dimension.

    raising selects the raising operators (and with them the reductive
    subalgebra) to decompose under.  Dropping "e3" decomposes under sl3
    alone, for spaces such as a single letter block that the isospin
    action does not preserve; the third label entry is then the plain h3
    weight of the highest vector and may be negative.
    """
    gnum = {"e1": 0, "e2": 1, "e3": 2}
    active = tuple(gnum[gid] for gid in raising)
    sl3 = 0 in active or 1 in active
    if sl3 and not (0 in active and 1 in active):
        raise ValueError("e1 and e2 must be selected together")

    def dim_of(label):
        d = 1
        if sl3:
            p, q = label[0], label[1]
            d *= (p + 1) * (q + 1) * (p + q + 2) // 2
        if 2 in active:
            d *= label[2] + 1
        return d

    locate = {}
    for w, keys in blocks.items():
        for i, k in enumerate(keys):
            locate[k] = (w, i)
    ecache = {}

    def eterms(key):
        hit = ecache.get(key)
        if hit is None:
            hit = []
            for gid in raising:
                img = act_g0(gid, ModuleVector(space, {key: 1}), graded)
                hit.append([(locate[k2], c) for k2, c in img.terms.items()])
            ecache[key] = hit
        return hit

    total = 0
    out = {}
    for w, bkeys in blocks.items():
        if kernels is None:
            kvecs = [{i: 1} for i in range(len(bkeys))]
        else:
            kvecs = kernels.get(w, [])
        icols = (images or {}).get(w, [])
        irank = SparseMatrix.from_columns(icols, len(bkeys)).rank() if icols else 0
        h = len(kvecs) - irank
        total += h
        if h <= 0 or any(w[g] < 0 for g in active):
            continue
        walpha = [tuple(w[j] + _E_ALPHA[g][j] for j in range(4))
                  for g in active]
        rows = {}
        for g in range(len(active)):
            for i2 in range(len(blocks.get(walpha[g], ()))):
                rows[(g, i2)] = len(rows)
        cols = []
        for v in kvecs:
            col = {}
            for i, c in v.items():
                for g in range(len(active)):
                    for ((w2, i2), c2) in eterms(bkeys[i])[g]:
                        assert w2 == walpha[g]
                        r = rows[(g, i2)]
                        col[r] = col.get(r, 0) + c * c2
            cols.append({r: c for r, c in col.items() if c})
        wembed = []
        for g in range(len(active)):
            for u in (images or {}).get(walpha[g], []):
                wembed.append({rows[(g, i)]: c for i, c in u.items()})
        nrows = len(rows)
        rank_all = SparseMatrix.from_columns(cols + wembed, nrows).rank()
        rank_w = SparseMatrix.from_columns(wembed, nrows).rank() if wembed else 0
        dim_n = len(kvecs) - (rank_all - rank_w)
        mult = dim_n - irank
        if mult < 0:
            raise InconsistentDecomposition(
                "negative multiplicity at weight %r" % (w,))
        if mult:
            label = (w[0], w[1], w[2], Fraction(w[3], 3))
            out[label] = out.get(label, 0) + mult
    covered = sum(dim_of(label) * mult for label, mult in out.items())
    if covered != total:
        raise InconsistentDecomposition(
            "labels cover dimension %d of %d" % (covered, total))
    return out


def _label_tuple(label_counts):
    out = []
    for label in sorted(label_counts):
        out.extend([label] * label_counts[label])
    return tuple(out)


# ---------------------------------------------------------------------------
# complexes
# ---------------------------------------------------------------------------


class HomologyResult:
    """Homology at one position.

    dimension is the total over nodes (and over computed degrees for the
    module families, where ``graded`` maps each -3Y degree to its
    dimension).  content is a sorted tuple of (p, q, r, y) labels with
    multiplicity for the finite families, or a dict degree -> tuple for
    the module families.  by_node splits the dimension over the nodes
    sharing the position (the joins put two families on the n=0 row).
    """

    __slots__ = ("position", "dimension", "graded", "content", "by_node")

    def __init__(self, position, dimension, graded, content, by_node):
        self.position = position
        self.dimension = dimension
        self.graded = graded
        self.content = content
        self.by_node = by_node

    def __repr__(self):
        extra = "" if self.graded is None else ", graded=%r" % (self.graded,)
        return "HomologyResult(%r, dim=%d%s)" % (self.position,
                                                 self.dimension, extra)


class Complex:
    """A built complex: nodes, arrows, and homology computation."""

    def __init__(self, spec, trunc):
        self.spec = spec
        self.trunc = trunc
        self.finite = spec.family in ("G", "Go", "Gab")
        self.graded_ops = spec.family in ("G", "Go", "Gab", "GrM")
        self.nodes = _nodes_for(spec)
        self._ops = {}

    def _op(self, op_id, source):
        key = (op_id, source)
        op = self._ops.get(key)
        if op is None:
            op = build_operator(op_id, source, graded=self.graded_ops)
            self._ops[key] = op
        return op

    def _keys(self, node, degree, block):
        sp, m, n = node
        if self.finite:
            keys = component_basis(sp, m, n, 6, graded=True)
        else:
            ld = degree + y3_component(sp, m, n)
            if ld < 0:
                return []
            vms = vmonos_of(sp, m, n)
            keys = [(lm, vm) for lm in lmonos_of_ldegree(ld) for vm in vms]
        if block is not None:
            keys = [k for k in keys if _ab_block(k) == block]
        return keys

    def _node_setup(self, node, degree):
        """Weight blocks of the node basis and incoming image columns."""
        out_id, ins = _edges_for(self.spec, node)
        nblock = ((self.spec.a, self.spec.b)
                  if self.spec.family == "Gab" else None)
        blocks = {}
        locate = {}
        for k in self._keys(node, degree, nblock):
            w = term_weight(node[0], k[0], k[1])
            lst = blocks.setdefault(w, [])
            locate[k] = (w, len(lst))
            lst.append(k)
        images = {}
        for op_id, src in ins:
            sblock = nblock
            if nblock is not None and op_id == "nabla2":
                sblock = (nblock[0] - 1, nblock[1] - 1)
            op = self._op(op_id, src)
            for k in self._keys(src, degree, sblock):
                img = op.apply(ModuleVector(src[0], {k: 1}))
                if not img.terms:
                    continue
                col = {}
                wgt = None
                for k2, c in img.terms.items():
                    w2, idx = locate[k2]
                    assert wgt is None or wgt == w2
                    wgt = w2
                    col[idx] = c
                images.setdefault(wgt, []).append(col)
        return blocks, images, out_id

    def _node_homology(self, node, degree, content):
        blocks, images, out_id = self._node_setup(node, degree)
        if not blocks:
            return 0, ({} if content else None)
        out_op = self._op(out_id, node)
        dim = 0
        kernels = {} if content else None
        for w, bkeys in blocks.items():
            mat, _ = operator_matrix(out_op, bkeys)
            if content:
                kv = mat.kernel_basis()
                kernels[w] = kv
                kdim = len(kv)
            else:
                kdim = len(bkeys) - mat.rank()
            icols = images.get(w, [])
            irank = (SparseMatrix.from_columns(icols, len(bkeys)).rank()
                     if icols else 0)
            if kdim < irank:
                raise CompositionNotZero(
                    "image exceeds kernel at %r, weight %r" % (node, w))
            dim += kdim - irank
        labels = None
        if content:
            raising = (("e1", "e2") if self.spec.family == "Gab"
                       else ("e1", "e2", "e3"))
            labels = g0_decompose(node[0], blocks, kernels, images,
                                  self.graded_ops, raising)
        return dim, labels

    def _dmin(self, nodes):
        return min((-y3_component(sp, m, n) for (sp, m, n) in nodes),
                   default=0)

    def homology(self, m, n, degree=None, content=False, space=None):
        (m0, m1), (n0, n1) = self.spec.window
        if not (m0 <= m <= m1 and n0 <= n <= n1):
            raise ValueError("position (%d, %d) outside window %r"
                             % (m, n, self.spec.window))
        here = [nd for nd in self.nodes
                if nd[1] == m and nd[2] == n
                and (space is None or nd[0] == space)]
        if self.finite:
            if degree is not None:
                raise ValueError("finite complexes are not degree-sliced")
            total = 0
            by_node = {}
            merged = {}
            for nd in here:
                d, labels = self._node_homology(nd, None, content)
                by_node[nd] = d
                total += d
                if content:
                    for lab, mult in labels.items():
                        merged[lab] = merged.get(lab, 0) + mult
            return HomologyResult((m, n), total, None,
                                  _label_tuple(merged) if content else None,
                                  by_node)
        degrees = ([degree] if degree is not None
                   else range(self._dmin(here), self.trunc + 1))
        graded = {}
        by_node = {}
        contents = {} if content else None
        for d in degrees:
            s = 0
            merged = {}
            for nd in here:
                dim, labels = self._node_homology(nd, d, content)
                s += dim
                by_node[nd] = by_node.get(nd, 0) + dim
                if content:
                    for lab, mult in labels.items():
                        merged[lab] = merged.get(lab, 0) + mult
            graded[d] = s
            if content:
                contents[d] = _label_tuple(merged)
        return HomologyResult((m, n), sum(graded.values()), graded,
                              contents, by_node)


def build(spec, trunc=None):
    """Build a complex and verify that consecutive arrows compose to zero."""
    if trunc is None:
        trunc = spec.trunc if spec.trunc is not None else DEFAULT_TRUNC
    cx = Complex(spec, trunc)
    for node in cx.nodes:
        out_id, ins = _edges_for(spec, node)
        if out_id is None or not ins:
            continue
        outer = cx._op(out_id, node)
        for op_id, src in ins:
            inner = cx._op(op_id, src)
            for vm, vec in compose_images(outer, inner).items():
                if vec:
                    raise CompositionNotZero(
                        "%s after %s nonzero at %r (source monomial %r)"
                        % (out_id, op_id, node, vm))
    return cx


def homology(cx, m, n, degree=None, content=False, space=None):
    """Homology of a built complex at one position (module-level alias)."""
    return cx.homology(m, n, degree=degree, content=content, space=space)


def verma_homology_graded(family, position, trunc=DEFAULT_TRUNC):
    """Degreewise homology of a module complex at one position.

    family is "M_A".."M_D", "M_AB", "M_CD", "GrM_A".."GrM_D" or "BigM";
    position is (m, n), or the full (space, m, n) node for "BigM".
    Returns dict -3Y degree -> dimension.
    """
    if family == "BigM":
        sp, m, n = position
        spec = ComplexSpec("BigM", window=((m, m), (n, n)))
        return build(spec, trunc).homology(m, n, space=sp).graded
    m, n = position
    spec = ComplexSpec(family, window=((m, m), (n, n)))
    return build(spec, trunc).homology(m, n).graded


class GradedPieces:
    """Degreewise dimensions and g0 content of one irreducible quotient."""

    __slots__ = ("node", "label", "dims", "content")

    def __init__(self, node, label, dims, content):
        self.node = node
        self.label = label
        self.dims = dims
        self.content = content

    def __repr__(self):
        return "GradedPieces(%r, label=%r)" % (self.node, self.label)


def irreducible_graded_pieces(node, trunc=DEFAULT_TRUNC, content=True):
    """The irreducible quotient of the module at a grid node, degreewise.

    The module at every grid node has the kernel of its outgoing arrow as
    its unique maximal submodule (for the three nodes with nonzero grid
    homology this is the top of the known submodule chain), so the
    irreducible quotient is computed as the image of that arrow, in
    source coordinates.  The trivial label gives the one-dimensional
    module concentrated in degree zero.
    """
    sp, m, n = node
    lab = module_label(node)
    if lab == (0, 0, 0, 0):
        cont = {0: ((0, 0, 0, Fraction(0)),)} if content else None
        return GradedPieces(node, lab, {0: 1}, cont)
    edge = grid_edge(sp, m, n)
    if edge is None:
        raise ValueError("no grid arrow out of %r" % (node,))
    op = build_operator(edge[0], node)
    vms = vmonos_of(sp, m, n)
    y3 = y3_component(sp, m, n)
    dims = {}
    cont = {} if content else None
    for d in range(-y3, trunc + 1):
        keys = [(lm, vm) for lm in lmonos_of_ldegree(d + y3) for vm in vms]
        blocks = {}
        for k in keys:
            blocks.setdefault(term_weight(sp, k[0], k[1]), []).append(k)
        total = 0
        kerns = {}
        for w, bkeys in blocks.items():
            mat, _ = operator_matrix(op, bkeys)
            kv = mat.kernel_basis()
            kerns[w] = kv
            total += len(bkeys) - len(kv)
        dims[d] = total
        if content:
            labels = g0_decompose(sp, blocks, kernels=None, images=kerns)
            cont[d] = _label_tuple(labels)
    return GradedPieces(node, lab, dims, cont)
