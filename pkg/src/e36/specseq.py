"""Spectral sequence of a filtered complex over the rationals.

A FilteredComplex is a finite-dimensional space with a differential d,
d^2 = 0, and an increasing bounded filtration F_p with d(F_p) contained
in F_{p-s+1}; s is the shift (s = 1 is the filtration-preserving case,
s = 0 lets d raise the level by one, which is what the PBW factor count
does on an induced module).  Pages follow the cycle description

    Z^r_p = {a in F_p : da in F_{p-r}}
    E^r_p = (Z^r_p + F_{p-1}) / (d Z^{r-1}_{p+r-1} + F_{p-1})

which makes sense for every integer r; below r = s - 1 it returns the
associated graded, on r = s - 1 the differential is the graded form of
d, and the page at r = s is the homology of the graded complex.  All
subspace arithmetic is exact, via column ranks.

The module strips used by the tests put three consecutive components of
an induced-module complex in one -3Y degree into a FilteredComplex
filtered by PBW factor count (shift 0).
"""

from .linalg import SparseMatrix
from .operators import build_operator
from .verma import (ModuleVector, lm_factor_count, lmonos_of_ldegree,
                    term_weight, vmonos_of, y3_component)


class NoStabilization(RuntimeError):
    """The pages kept moving up to the allowed page bound."""


def _rank(cols, nrows):
    cols = [c for c in cols if c]
    if not cols:
        return 0
    return SparseMatrix.from_columns(cols, nrows).rank()


class FilteredComplex:
    """dim, differential columns, filtration bases, shift."""

    def __init__(self, dim, d_columns, filtration, shift):
        if len(d_columns) != dim:
            raise ValueError("need one differential column per basis vector")
        self.dim = dim
        self.d_columns = [dict(c) for c in d_columns]
        self.shift = shift
        self.levels = sorted(filtration)
        self._bases = {p: [dict(v) for v in filtration[p]] for p in self.levels}
        self._check()

    @classmethod
    def from_degrees(cls, d_columns, degrees, shift):
        """Filtration spanned by the basis vectors of degree <= p."""
        filtration = {}
        for p in sorted(set(degrees)):
            filtration[p] = [{i: 1} for i, q in enumerate(degrees) if q <= p]
        if not filtration:
            filtration[0] = []
        return cls(len(degrees), d_columns, filtration, shift)

    def d_vec(self, v):
        out = {}
        for i, c in v.items():
            for j, c2 in self.d_columns[i].items():
                val = out.get(j, 0) + c * c2
                if val:
                    out[j] = val
                else:
                    del out[j]
        return out

    def F(self, p):
        if not self.levels or p < self.levels[0]:
            return []
        for q in reversed(self.levels):
            if q <= p:
                return self._bases[q]
        return []

    def _check(self):
        n = self.dim
        for i, col in enumerate(self.d_columns):
            dd = self.d_vec(col)
            if dd:
                raise ValueError("d squared nonzero on basis vector %d" % i)
        top = self.levels[-1] if self.levels else None
        if top is None or _rank(self._bases[top], n) != n:
            raise ValueError("filtration is not exhaustive")
        prev = []
        for p in self.levels:
            cur = self._bases[p]
            if _rank(prev + cur, n) != _rank(cur, n):
                raise ValueError("filtration not increasing at level %d" % p)
            prev = cur
        for p in self.levels:
            fp = self._bases[p]
            target = self.F(p - self.shift + 1)
            dcols = [self.d_vec(v) for v in fp]
            if _rank(dcols + target, n) != _rank(target, n):
                raise ValueError("d does not respect the filtration shift"
                                 " at level %d" % p)

    def z_basis(self, r, p):
        """Vectors of F_p whose differential lands in F_{p-r}."""
        fp = self.F(p)
        if not fp:
            return []
        fq = self.F(p - r)
        stacked = [self.d_vec(v) for v in fp] + list(fq)
        mat = SparseMatrix.from_columns(stacked, self.dim)
        out = []
        for k in mat.kernel_basis():
            w = {}
            for i, c in k.items():
                if i >= len(fp):
                    continue
                for j, c2 in fp[i].items():
                    val = w.get(j, 0) + c * c2
                    if val:
                        w[j] = val
                    else:
                        del w[j]
            if w:
                out.append(w)
        return out

    def gr_homology(self):
        """dim Gr_p H as a dict, the direct oracle for the last page."""
        n = self.dim
        big = (self.levels[-1] - self.levels[0] + 2) if self.levels else 1
        bcols = [c for c in self.d_columns if c]
        out = {}
        prev = _rank(self.z_basis(big, self.levels[0] - 1) + bcols, n)
        for p in range(self.levels[0], self.levels[-1] + 1):
            cur = _rank(self.z_basis(big, p) + bcols, n)
            out[p] = cur - prev
            prev = cur
        return out


class Page:
    """One page: dimensions of E^r_p and the ranks of d^r out of each p."""

    __slots__ = ("r", "dims", "ranks")

    def __init__(self, r, dims, ranks):
        self.r = r
        self.dims = dims
        self.ranks = ranks

    def __repr__(self):
        return "Page(r=%d, dims=%r)" % (self.r, self.dims)


def page(fc, r):
    if not fc.levels:
        return Page(r, {}, {})
    lo, hi = fc.levels[0], fc.levels[-1]
    n = fc.dim
    zmemo = {}

    def z(rr, p):
        key = (rr, p)
        if key not in zmemo:
            zmemo[key] = fc.z_basis(rr, p)
        return zmemo[key]

    def den(p):
        return ([fc.d_vec(v) for v in z(r - 1, p + r - 1)]
                + list(fc.F(p - 1)))

    dims = {}
    ranks = {}
    for p in range(lo, hi + 1):
        num = _rank(z(r, p) + list(fc.F(p - 1)), n)
        dims[p] = num - _rank(den(p), n)
        dz = [fc.d_vec(v) for v in z(r, p)]
        dn = den(p - r)
        ranks[p] = _rank(dz + dn, n) - _rank(dn, n)
    return Page(r, dims, ranks)


class Convergence:
    """Pages up to stabilization plus the direct graded-homology oracle."""

    __slots__ = ("pages", "einf", "gr_h", "stable_at")

    def __init__(self, pages, einf, gr_h, stable_at):
        self.pages = pages
        self.einf = einf
        self.gr_h = gr_h
        self.stable_at = stable_at

    @property
    def agrees(self):
        keys = set(self.einf) | set(self.gr_h)
        return all(self.einf.get(k, 0) == self.gr_h.get(k, 0) for k in keys)


def converge(fc, max_r=None):
    """Run pages until they stop moving and compare with Gr H."""
    if not fc.levels:
        return Convergence([], {}, {}, fc.shift - 1)
    width = fc.levels[-1] - fc.levels[0] + 1
    cap = width + abs(fc.shift) + 2
    if max_r is not None:
        cap = max_r
    pages = [page(fc, r) for r in range(fc.shift - 1, cap + 1)]
    if any(pages[-1].ranks.values()):
        raise NoStabilization("page %d still has a nonzero differential"
                              % pages[-1].r)
    stable_at = None
    for i in range(len(pages) - 1, -1, -1):
        if any(pages[i].ranks.values()):
            break
        stable_at = pages[i].r
    return Convergence(pages, pages[-1].dims, fc.gr_homology(), stable_at)


def degeneration_report(fc, from_page=1):
    """Whether every differential from the given page on vanishes."""
    conv = converge(fc)
    ranks = {pg.r: dict(pg.ranks) for pg in conv.pages}
    first = None
    for pg in conv.pages:
        if pg.r < from_page:
            continue
        for p in sorted(pg.ranks):
            if pg.ranks[p] and first is None:
                first = (pg.r, p)
    return {
        "degenerates": first is None,
        "first_nonzero": first,
        "ranks": ranks,
        "stable_at": conv.stable_at,
        "agrees_with_gr_h": conv.agrees,
    }


def random_filtered_complex(rng, max_dim=40, shift=1):
    """A random three-term complex with a compatible random filtration.

    d is built exactly: the top map goes into the kernel of the bottom
    map, so d^2 = 0 by construction; filtration degrees are assigned
    upward from the supports so that d(F_p) lands in F_{p-shift+1}.
    """
    n0 = rng.randint(2, max(2, max_dim // 3 - 1))
    n1 = rng.randint(2, max(2, max_dim // 3))
    n2 = rng.randint(1, max(1, max_dim - n0 - n1 - 1))
    d1 = []
    for _ in range(n1):
        col = {}
        for i in range(n0):
            if rng.random() < 0.4:
                c = rng.randint(-2, 2)
                if c:
                    col[i] = c
        d1.append(col)
    ker = SparseMatrix.from_columns(d1, n0).kernel_basis()
    d2 = []
    for _ in range(n2):
        col = {}
        for k in ker:
            c = rng.randint(-1, 1)
            if not c:
                continue
            for i, v in k.items():
                val = col.get(i, 0) + c * v
                if val:
                    col[i] = val
                else:
                    del col[i]
        d2.append(col)
    cols = [{} for _ in range(n0)]
    cols += [dict(c) for c in d1]
    cols += [{i + n0: v for i, v in c.items()} for c in d2]
    degs = [rng.randint(0, 2) for _ in range(n0)]
    for c in d1:
        base = max((degs[i] for i in c), default=None)
        if base is None:
            degs.append(rng.randint(0, 3))
        else:
            degs.append(base + shift - 1 + rng.randint(0, 2))
    for c in d2:
        base = max((degs[i + n0] for i in c), default=None)
        if base is None:
            degs.append(rng.randint(0, 3))
        else:
            degs.append(base + shift - 1 + rng.randint(0, 2))
    return FilteredComplex.from_degrees(cols, degs, shift)


def _strip_keys(family, position, degree):
    space = family.split("_", 1)[1]
    m, n = position
    signs = {"A": (1, 1), "B": (1, -1), "C": (-1, 1), "D": (-1, -1)}[space]
    nodes = []
    for k in (1, 0, -1):
        mm, nn = m + k, n + k
        if mm * signs[0] >= 0 and nn * signs[1] >= 0:
            nodes.append((space, mm, nn))
    keys = []
    for node in nodes:
        ld = degree + y3_component(*node)
        if ld >= 0:
            vms = vmonos_of(*node)
            keys.extend(((node, lm, vm)
                         for lm in lmonos_of_ldegree(ld) for vm in vms))
    return nodes, keys


def strip_weights(family, position, degree):
    """The g0-weights present on a module strip, in a stable order."""
    nodes, keys = _strip_keys(family, position, degree)
    return sorted({term_weight(node[0], lm, vm)[:3]
                   for (node, lm, vm) in keys})


def filtered_module_strip(family, position, degree, weight=None,
                          graded=False):
    """Three consecutive components of a module complex, one -3Y degree.

    family is "M_A".."M_D"; the carrier is the degree slice of the three
    components around the position, the differential is nabla (its graded
    form when graded is set), and the filtration is by PBW factor count,
    so the shift is 0.  nabla preserves g0-weights, so passing one of the
    strip_weights restricts to that block; page dimensions add up over
    the blocks.
    """
    nodes, keys = _strip_keys(family, position, degree)
    if weight is not None:
        keys = [k for k in keys
                if term_weight(k[0][0], k[1], k[2])[:3] == weight]
    index = {k: i for i, k in enumerate(keys)}
    cols = []
    ops = {node: build_operator("nabla", node, graded=graded)
           for node in nodes}
    nodeset = set(nodes)
    for (node, lm, vm) in keys:
        nxt = (node[0], node[1] - 1, node[2] - 1)
        if nxt not in nodeset:
            cols.append({})
            continue
        img = ops[node].apply(ModuleVector(node[0], {(lm, vm): 1}))
        cols.append({index[(nxt, k2[0], k2[1])]: c
                     for k2, c in img.terms.items()})
    degs = [lm_factor_count(lm) for (_, lm, _) in keys]
    if not keys:
        return FilteredComplex(0, [], {0: []}, 0)
    return FilteredComplex.from_degrees(cols, degs, 0)
