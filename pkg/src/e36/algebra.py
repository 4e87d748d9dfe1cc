"""Polynomial model of the rank-five exceptional linearly compact superalgebra.

Even part: polynomial vector fields X = sum_i f_i d/dx_i in five variables
with div X = 0.  Odd part: closed polynomial 2-forms w = sum_{i<j} f_ij
dx_i ^ dx_j.  Brackets:

    [X, Y]   commutator of vector fields,
    [X, w]   Lie derivative of the form along the field,
    [w, w']  for w = f dx_i^dx_j and w' = g dx_l^dx_m, the contraction
             eps(k,i,j,l,m) f g d/dx_k, where k is the index missing from
             {i,j,l,m} (zero unless all four are distinct).

Variables are 0-indexed; slots 0,1,2 are the "space" variables and slots
3,4 the two extra ones (written z+ and z- elsewhere).  The subalgebra of
secondary degree zero is the smaller exceptional algebra whose module
theory the rest of the package studies; its graded pieces are spanned by
the generator catalog below.

All coefficients are exact (int or Fraction).
"""

from fractions import Fraction

from .linalg import SparseMatrix, solve_in_span

ZERO5 = (0, 0, 0, 0, 0)

# eigenvalues of the diagonal catalog elements on each variable x_s;
# a dx_s transforms with the same weight as x_s, a d/dx_s with the opposite
CARTAN_ON_X = {
    "h1": (1, -1, 0, 0, 0),
    "h2": (0, 1, -1, 0, 0),
    "h3": (0, 0, 0, 1, -1),
    "3Y": (2, 2, 2, -3, -3),
}


class GeneratorId(str):
    """Name of a catalog generator (a plain string subtype)."""


def _mono_mul(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4])


def _mono_shift(a, down, up):
    """x^a / x_down * x_up, or None if the exponent would go negative."""
    if a[down] == 0:
        return None
    m = list(a)
    m[down] -= 1
    m[up] += 1
    return tuple(m)


def _unit(i):
    m = [0] * 5
    m[i] = 1
    return tuple(m)


class VectorField5:
    """Sparse polynomial vector field: terms maps (slot, monomial) -> coeff,

    meaning coeff * x^monomial * d/dx_slot summed over the dict.
    """

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = c

    def add_term(self, slot, mono, coeff):
        if not coeff:
            return
        k = (slot, mono)
        v = self.terms.get(k, 0) + coeff
        if v:
            self.terms[k] = v
        else:
            del self.terms[k]

    def divergence(self):
        out = {}
        for (slot, mono), c in self.terms.items():
            if mono[slot]:
                m = list(mono)
                m[slot] -= 1
                key = tuple(m)
                v = out.get(key, 0) + c * mono[slot]
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, VectorField5) and self.terms == other.terms

    def __repr__(self):
        return "VectorField5(%r)" % (self.terms,)


class ClosedTwoForm:
    """Sparse polynomial 2-form: terms maps ((i, j), monomial) -> coeff

    with i < j, meaning coeff * x^monomial * dx_i ^ dx_j.
    """

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for ((i, j), mono), c in terms.items():
                self.add_term(i, j, mono, c)

    def add_term(self, i, j, mono, coeff):
        if not coeff or i == j:
            return
        if i > j:
            i, j, coeff = j, i, -coeff
        k = ((i, j), mono)
        v = self.terms.get(k, 0) + coeff
        if v:
            self.terms[k] = v
        else:
            del self.terms[k]

    def exterior_derivative(self):
        """Coefficients of the 3-form d(self), as ((i,j,k), mono) -> coeff."""
        out = {}
        for ((i, j), mono), c in self.terms.items():
            for s in range(5):
                if not mono[s] or s in (i, j):
                    continue
                m = list(mono)
                m[s] -= 1
                trip = tuple(sorted((s, i, j)))
                # sign of sorting (s, i, j) with i < j
                if s < i:
                    sgn = 1
                elif s < j:
                    sgn = -1
                else:
                    sgn = 1
                key = (trip, tuple(m))
                v = out.get(key, 0) + sgn * c * mono[s]
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    def is_closed(self):
        return not self.exterior_derivative()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, ClosedTwoForm) and self.terms == other.terms

    def __repr__(self):
        return "ClosedTwoForm(%r)" % (self.terms,)


class E510Element:
    """General element: an even (field) part plus an odd (2-form) part."""

    def __init__(self, even=None, odd=None):
        self.even = even if even is not None else VectorField5()
        self.odd = odd if odd is not None else ClosedTwoForm()

    @classmethod
    def field(cls, terms):
        return cls(even=VectorField5(terms))

    @classmethod
    def form(cls, terms):
        return cls(odd=ClosedTwoForm(terms))

    def is_even(self):
        return not self.odd

    def is_odd(self):
        return not self.even

    def scaled(self, k):
        out = E510Element()
        for key, c in self.even.terms.items():
            out.even.terms[key] = k * c
        for key, c in self.odd.terms.items():
            out.odd.terms[key] = k * c
        return out

    def __add__(self, other):
        out = E510Element()
        out.even.terms = dict(self.even.terms)
        out.odd.terms = dict(self.odd.terms)
        for (slot, mono), c in other.even.terms.items():
            out.even.add_term(slot, mono, c)
        for ((i, j), mono), c in other.odd.terms.items():
            out.odd.add_term(i, j, mono, c)
        return out

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __bool__(self):
        return bool(self.even) or bool(self.odd)

    def __eq__(self, other):
        return (isinstance(other, E510Element)
                and self.even == other.even and self.odd == other.odd)

    def __repr__(self):
        return "E510Element(even=%r, odd=%r)" % (self.even.terms, self.odd.terms)


def _perm_sign(seq):
    """Sign of a permutation given as a sequence of distinct ints."""
    sgn = 1
    n = len(seq)
    for a in range(n):
        for b in range(a + 1, n):
            if seq[a] > seq[b]:
                sgn = -sgn
    return sgn


def _bracket_ff(x, y):
    out = VectorField5()
    for (j, a), cx in x.terms.items():
        for (k, b), cy in y.terms.items():
            if b[j]:
                m = list(_mono_mul(a, b))
                m[j] -= 1
                out.add_term(k, tuple(m), cx * cy * b[j])
            if a[k]:
                m = list(_mono_mul(a, b))
                m[k] -= 1
                out.add_term(j, tuple(m), -cx * cy * a[k])
    return out


def _bracket_fw(x, w):
    """Lie derivative of the 2-form w along the field x."""
    out = ClosedTwoForm()
    for (j, a), cx in x.terms.items():
        for ((l, m), b), cw in w.terms.items():
            c = cx * cw
            if b[j]:
                mm = list(_mono_mul(a, b))
                mm[j] -= 1
                out.add_term(l, m, tuple(mm), c * b[j])
            # d(x^a) ^ dx_m and dx_l ^ d(x^a) replacements
            if j == l:
                for s in range(5):
                    if a[s]:
                        mm = list(_mono_mul(a, b))
                        mm[s] -= 1
                        out.add_term(s, m, tuple(mm), c * a[s])
            if j == m:
                for s in range(5):
                    if a[s]:
                        mm = list(_mono_mul(a, b))
                        mm[s] -= 1
                        out.add_term(l, s, tuple(mm), c * a[s])
    return out


def _bracket_ww(w, v):
    out = VectorField5()
    for ((i, j), a), cw in w.terms.items():
        for ((l, m), b), cv in v.terms.items():
            idx = {i, j, l, m}
            if len(idx) != 4:
                continue
            k = ({0, 1, 2, 3, 4} - idx).pop()
            sgn = _perm_sign((k, i, j, l, m))
            out.add_term(k, _mono_mul(a, b), sgn * cw * cv)
    return out


def bracket(x, y):
    """Superbracket of two general elements."""
    even = _bracket_ff(x.even, y.even)
    ww = _bracket_ww(x.odd, y.odd)
    for key, c in ww.terms.items():
        even.add_term(key[0], key[1], c)
    odd = _bracket_fw(x.even, y.odd)
    back = _bracket_fw(y.even, x.odd)
    for ((i, j), m), c in back.terms.items():
        odd.add_term(i, j, m, -c)
    return E510Element(even, odd)


def consistent_degree_terms(el):
    """Set of consistent degrees present: 2|mono|-2 per field term,

    2|mono|-1 per form term."""
    degs = set()
    for (_, mono), _c in el.even.terms.items():
        degs.add(2 * sum(mono) - 2)
    for (_, mono), _c in el.odd.terms.items():
        degs.add(2 * sum(mono) - 1)
    return degs


def secondary_component(el, j):
    """The part of an element in secondary degree j.

    Secondary degree counts the two extra variables: +1 per power of x_3 or
    x_4 (0-indexed), -1 for d/dx_3 or d/dx_4, -1/2 per dx_0..dx_2 and +1/2
    per dx_3, dx_4.  It is an integer on every field and 2-form term.  The
    subalgebra of secondary degree zero is the one all modules are over.
    """
    out = E510Element()
    for (slot, mono), c in el.even.terms.items():
        d = mono[3] + mono[4] - (1 if slot >= 3 else 0)
        if d == j:
            out.even.add_term(slot, mono, c)
    for ((a, b), mono), c in el.odd.terms.items():
        d = 2 * (mono[3] + mono[4]) - (1 if a < 3 else -1) - (1 if b < 3 else -1)
        if d % 2:
            raise AssertionError("half-integer secondary degree on a 2-form term")
        if d // 2 == j:
            out.odd.add_term(a, b, mono, c)
    return out


class NotInCatalogSpan(ValueError):
    """A bracket of catalog generators left the span of the catalog."""


def _build_catalog():
    x = _unit
    cat = {}
    for i in range(3):
        cat["p%d" % (i + 1)] = E510Element.field({(i, ZERO5): 1})
        cat["d%d+" % (i + 1)] = E510Element.form({((i, 3), ZERO5): 1})
        cat["d%d-" % (i + 1)] = E510Element.form({((i, 4), ZERO5): 1})
    cat["h1"] = E510Element.field({(0, x(0)): 1, (1, x(1)): -1})
    cat["h2"] = E510Element.field({(1, x(1)): 1, (2, x(2)): -1})
    cat["h3"] = E510Element.field({(3, x(3)): 1, (4, x(4)): -1})
    cat["Y"] = E510Element.field({(0, x(0)): Fraction(2, 3), (1, x(1)): Fraction(2, 3),
                                  (2, x(2)): Fraction(2, 3), (3, x(3)): -1, (4, x(4)): -1})
    cat["e1"] = E510Element.field({(1, x(0)): 1})
    cat["e2"] = E510Element.field({(2, x(1)): 1})
    cat["e12"] = E510Element.field({(2, x(0)): 1})
    cat["f1"] = E510Element.field({(0, x(1)): 1})
    cat["f2"] = E510Element.field({(1, x(2)): 1})
    cat["f12"] = E510Element.field({(0, x(2)): 1})
    cat["e3"] = E510Element.field({(4, x(3)): 1})
    cat["f3"] = E510Element.field({(3, x(4)): 1})
    # the two generators one level up, and the extras their brackets produce
    cat["e0"] = E510Element.form({((1, 4), x(2)): 1, ((2, 4), x(1)): -1, ((1, 2), x(4)): 2})
    cat["e0p"] = E510Element.form({((2, 4), x(2)): 1})
    cat["f0"] = E510Element.form({((0, 3), ZERO5): 1})
    cat["h0"] = E510Element.field({(1, x(1)): -1, (2, x(2)): -1, (4, x(4)): 2})
    return cat


GENERATOR_IDS = [
    "p1", "p2", "p3",
    "d1+", "d2+", "d3+", "d1-", "d2-", "d3-",
    "h1", "h2", "h3", "Y",
    "e1", "e2", "e3", "e12",
    "f1", "f2", "f3", "f12",
    "e0", "e0p", "f0", "h0",
]

_CATALOG = None


def generator_catalog():
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
        for gid, el in _CATALOG.items():
            assert not el.even or not el.even.divergence(), gid
            assert not el.odd or el.odd.is_closed(), gid
    return _CATALOG


def _element_rows(el, index):
    """Sparse column of an element over a shared term index (grown on demand)."""
    col = {}
    for key, c in el.even.terms.items():
        k = ("f", key)
        col[index.setdefault(k, len(index))] = c
    for key, c in el.odd.terms.items():
        k = ("w", key)
        col[index.setdefault(k, len(index))] = c
    return col


# catalog members used as the spanning set when expressing brackets; h0 is
# dependent (h0 = 2/3 h1 + 1/3 h2 - h3 - Y) so it is left out
_SPAN_IDS = [g for g in GENERATOR_IDS if g != "h0"]


def structure_constants(gid1, gid2):
    """[g1, g2] expressed over the catalog, as a dict gid -> coeff.

    Raises NotInCatalogSpan when the bracket does not lie in the span of the
    catalog (it then lives in a graded piece the catalog does not cover).
    """
    cat = generator_catalog()
    target = bracket(cat[gid1], cat[gid2])
    if not target:
        return {}
    index = {}
    cols = [_element_rows(cat[g], index) for g in _SPAN_IDS]
    tcol = _element_rows(target, index)
    coeffs = solve_in_span(cols, tcol, len(index))
    if coeffs is None:
        raise NotInCatalogSpan("[%s, %s] is outside the catalog span" % (gid1, gid2))
    return {g: c for g, c in zip(_SPAN_IDS, coeffs) if c}


def super_jacobi_defect(a, b, c, pa, pb, pc):
    """(-1)^{pa pc}[a,[b,c]] + (-1)^{pb pa}[b,[c,a]] + (-1)^{pc pb}[c,[a,b]].

    Zero on any triple of parity-homogeneous elements; returned so tests can
    assert exact vanishing.
    """
    t1 = bracket(a, bracket(b, c)).scaled((-1) ** (pa * pc))
    t2 = bracket(b, bracket(c, a)).scaled((-1) ** (pb * pa))
    t3 = bracket(c, bracket(a, b)).scaled((-1) ** (pc * pb))
    return t1 + t2 + t3


def _random_mono(rng, max_degree):
    deg = rng.randint(0, max_degree)
    m = [0] * 5
    for _ in range(deg):
        m[rng.randrange(5)] += 1
    return tuple(m)


def random_element(rng, parity, max_degree=4):
    """A random parity-homogeneous element well away from the catalog.

    Even samples are sums of curls (dg/dx_j) d/dx_i - (dg/dx_i) d/dx_j,
    divergence free for any polynomial g; odd samples are sums of exact
    forms d(g dx_k), closed for any g.  Coefficient degrees stay below
    max_degree and all coefficients are small integers.
    """
    total = E510Element()
    for _ in range(rng.randint(1, 3)):
        g = _random_mono(rng, max_degree)
        c = rng.choice((-3, -2, -1, 1, 2, 3))
        part = E510Element()
        if parity == 0:
            i = rng.randrange(5)
            j = (i + rng.randrange(1, 5)) % 5
            for s, t, sgn in ((j, i, 1), (i, j, -1)):
                if g[s]:
                    m = list(g)
                    m[s] -= 1
                    part.even.add_term(t, tuple(m), sgn * g[s])
        else:
            k = rng.randrange(5)
            for s in range(5):
                if g[s] and s != k:
                    m = list(g)
                    m[s] -= 1
                    part.odd.add_term(s, k, tuple(m), g[s])
        total = total + part.scaled(c)
    return total


def term_weight(kind, key):
    """(h1, h2, h3, 3Y) weight of a single field or form term.

    kind "f": key = (slot, mono); kind "w": key = ((i, j), mono).
    """
    out = []
    for h in ("h1", "h2", "h3", "3Y"):
        wx = CARTAN_ON_X[h]
        if kind == "f":
            slot, mono = key
            w = -wx[slot]
        else:
            (i, j), mono = key
            w = wx[i] + wx[j]
        w += sum(e * wx[s] for s, e in enumerate(mono))
        out.append(w)
    return tuple(out)
