"""Exact sparse linear algebra over the rationals, plus Laurent series helpers.

Everything downstream reduces to ranks and kernels of sparse matrices with
integer (occasionally rational) entries.  Elimination is fraction-free where
possible: rows are rescaled to integers and combined by cross-multiplication,
with gcd reduction to keep entries small.  No floating point anywhere.

Scalars are plain ``int`` whenever possible and ``fractions.Fraction``
otherwise; the two mix freely.
"""

from fractions import Fraction
from math import gcd

# Public alias: exact scalar type.  ints are accepted everywhere Fractions are.
Rational = Fraction


def ratio(a, b):
    """Exact a/b, returned as int when the division is exact."""
    q = Fraction(a, b) if not isinstance(a, Fraction) and not isinstance(b, Fraction) else Fraction(a) / Fraction(b)
    return int(q) if q.denominator == 1 else q


def _as_int_row(row):
    """Scale a sparse row (dict col->scalar) to integer entries.

    Returns a new dict.  Rational entries are cleared by multiplying through
    by the lcm of denominators; the row is then reduced by the gcd of its
    entries, so the result is primitive.
    """
    lcm = 1
    for c in row.values():
        if isinstance(c, Fraction):
            d = c.denominator
            lcm = lcm // gcd(lcm, d) * d
    out = {}
    g = 0
    for j, c in row.items():
        v = int(c * lcm)
        if v:
            out[j] = v
            g = gcd(g, v)
    if g > 1:
        for j in out:
            out[j] //= g
    return out


class SparseMatrix:
    """A sparse matrix stored as a list of sparse rows (dict col -> scalar).

    Rows and columns are indexed by integers 0..nrows-1 / 0..ncols-1.
    The matrix is mutable while being assembled; rank/kernel calls do not
    modify it (they work on copies).
    """

    def __init__(self, nrows, ncols):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [dict() for _ in range(nrows)]

    def set(self, i, j, value):
        if value:
            self.rows[i][j] = value
        else:
            self.rows[i].pop(j, None)

    def add(self, i, j, value):
        row = self.rows[i]
        v = row.get(j, 0) + value
        if v:
            row[j] = v
        else:
            row.pop(j, None)

    @classmethod
    def from_columns(cls, columns, nrows):
        """Build from a list of sparse columns (dict row -> scalar)."""
        m = cls(nrows, len(columns))
        for j, col in enumerate(columns):
            for i, c in col.items():
                if c:
                    m.rows[i][j] = m.rows[i].get(j, 0) + c
        return m

    def column(self, j):
        return {i: row[j] for i, row in enumerate(self.rows) if j in row}

    def apply(self, vec):
        """Matrix times sparse column vector (dict col -> scalar)."""
        out = {}
        for i, row in enumerate(self.rows):
            s = 0
            for j, c in row.items():
                if j in vec:
                    s += c * vec[j]
        # slow path above is O(nnz(row)); fine for the sizes we use
            if s:
                out[i] = s
        return out

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def _echelon(self, forbid=()):
        """Integer row echelon form.

        Returns (pivots, rows) where pivots is a list of (row_index, col)
        into the returned row list.  Fraction-free: each surviving row stays
        integral and primitive.  Columns listed in ``forbid`` are never used
        as pivots (rows supported only on them are left unprocessed).
        """
        rows = [_as_int_row(r) for r in self.rows if r]
        rows = [r for r in rows if r]
        pivots = []
        done = set()
        while True:
            # pick the shortest unprocessed row to limit fill-in
            best = None
            for idx, r in enumerate(rows):
                if idx in done or not r or all(j in forbid for j in r):
                    continue
                if best is None or len(r) < len(rows[best]):
                    best = idx
            if best is None:
                break
            done.add(best)
            prow = rows[best]
            # pivot column: prefer entries +-1, then smallest magnitude
            pcol = min((j for j in prow if j not in forbid),
                       key=lambda j: (abs(prow[j]) != 1, abs(prow[j]), j))
            pval = prow[pcol]
            pivots.append((best, pcol))
            for idx, r in enumerate(rows):
                if idx == best or pcol not in r:
                    continue
                c = r.pop(pcol)
                # r <- pval*r - c*prow  (pcol itself is already cancelled)
                if pval != 1:
                    for j in r:
                        r[j] *= pval
                for j, pv in prow.items():
                    if j == pcol:
                        continue
                    v = r.get(j, 0) - c * pv
                    if v:
                        r[j] = v
                    else:
                        r.pop(j, None)
                if pval != 1 and r:
                    g = 0
                    for v in r.values():
                        g = gcd(g, v)
                    if g > 1:
                        for j in r:
                            r[j] //= g
                rows[idx] = r
        return pivots, rows

    def rank(self):
        pivots, _ = self._echelon()
        return len(pivots)

    def kernel_basis(self):
        """Basis of the right kernel, one sparse dict col->scalar per vector.

        Vectors are scaled to primitive integer form.
        """
        pivots, rows = self._echelon()
        pivot_cols = {c for _, c in pivots}
        basis = []
        for f in range(self.ncols):
            if f in pivot_cols:
                continue
            vec = {f: Fraction(1)}
            # rows are fully reduced against each other (Gauss-Jordan style
            # elimination above removes the pivot column from every other
            # row), so each pivot variable is determined directly.
            for ridx, pcol in pivots:
                row = rows[ridx]
                s = Fraction(0)
                for j, c in row.items():
                    if j == pcol:
                        continue
                    if j in vec:
                        s += Fraction(c) * vec[j]
                if s:
                    vec[pcol] = -s / row[pcol]
            basis.append(_as_int_row(vec))
        return basis


def rank_and_kernel(matrix):
    """Rank and right-kernel basis of a SparseMatrix."""
    return matrix.rank(), matrix.kernel_basis()


def homology_dimension(d_out, d_in):
    """dim ker(d_out) - rank(d_in) for consecutive maps B --d_in--> C --d_out--> A.

    Both arguments are SparseMatrix instances whose column spaces are C and B
    respectively.  Raises ValueError if the ranks are inconsistent with
    d_out . d_in = 0 (the caller is expected to have a genuine complex).
    """
    k = d_out.ncols - d_out.rank()
    r = d_in.rank()
    if r > k:
        raise ValueError("maps do not compose to zero: rank(d_in)=%d > dim ker(d_out)=%d" % (r, k))
    return k - r


def solve_in_span(columns, vector, nrows):
    """Express ``vector`` in the span of ``columns`` if possible.

    columns: list of sparse dicts row->scalar; vector: sparse dict.
    Returns a list of coefficients (int/Fraction) or None when the vector is
    not in the span.
    """
    aug = len(columns)
    m = SparseMatrix.from_columns(list(columns) + [vector], nrows)
    pivots, rows = m._echelon(forbid=frozenset((aug,)))
    # inconsistent iff some fully reduced row is supported on the vector only
    if any(r and set(r) == {aug} for r in rows):
        return None
    # back-substitute with the augmented column frozen at -1 so that
    # sum coeff_j * col_j - vector = 0
    vec = {aug: Fraction(-1)}
    for ridx, pcol in pivots:
        row = rows[ridx]
        s = Fraction(0)
        for j, c in row.items():
            if j != pcol and j in vec:
                s += Fraction(c) * vec[j]
        if s:
            vec[pcol] = -s / row[pcol]
    coeffs = []
    for j in range(aug):
        c = vec.get(j, 0)
        if isinstance(c, Fraction) and c.denominator == 1:
            c = int(c)
        coeffs.append(c)
    return coeffs


# ---------------------------------------------------------------------------
# Laurent series and rational functions in one variable t
# ---------------------------------------------------------------------------


class PoleAtMinusOne(ArithmeticError):
    """Raised when a size limit is requested but the limit does not exist."""


class LaurentSeries:
    """Truncated Laurent series: coefficients for degrees <= truncation_order.

    coeffs is a dict degree -> scalar; degrees above the truncation order are
    unknown, degrees at or below it that are absent are zero.
    """

    def __init__(self, coeffs=None, truncation_order=0):
        self.truncation_order = truncation_order
        self.coeffs = {}
        if coeffs:
            for d, c in coeffs.items():
                if c and d <= truncation_order:
                    self.coeffs[d] = c

    def __getitem__(self, deg):
        if deg > self.truncation_order:
            raise IndexError("degree %d beyond truncation order %d" % (deg, self.truncation_order))
        return self.coeffs.get(deg, 0)

    def __add__(self, other):
        t = min(self.truncation_order, other.truncation_order)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return LaurentSeries(out, t)

    def __sub__(self, other):
        t = min(self.truncation_order, other.truncation_order)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) - c
        return LaurentSeries(out, t)

    def scaled(self, k):
        return LaurentSeries({d: k * c for d, c in self.coeffs.items()}, self.truncation_order)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        t = min(self.truncation_order, other.truncation_order)
        degs = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(d, 0) == other.coeffs.get(d, 0) for d in degs if d <= t)

    def __repr__(self):
        terms = ["%s*t^%d" % (c, d) for d, c in sorted(self.coeffs.items())]
        return "LaurentSeries(%s; O(t^%d))" % (" + ".join(terms) or "0", self.truncation_order + 1)


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_add(a, b):
    out = list(a) + [0] * (len(b) - len(a)) if len(b) > len(a) else list(a)
    for j, y in enumerate(b):
        out[j] += y
    return _poly_trim(out)


def _poly_scale(a, k):
    return _poly_trim([k * x for x in a])


def _poly_divmod(a, b):
    """Exact division of dense rational polynomials (lists, low degree first)."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        _poly_trim(a)
        if len(a) < len(b):
            break
        k = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = k
        for j, y in enumerate(b):
            a[shift + j] -= k * y
        _poly_trim(a)
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [Fraction(x) / lead for x in a]
    return a


def _poly_eval(p, t):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


class RationalFunction:
    """t^shift * num(t)/den(t) with integer-or-rational dense coefficients.

    num and den are lists, lowest degree first; den has nonzero constant
    term (powers of t are moved into the shift).
    """

    def __init__(self, num, den=(1,), shift=0):
        num = _poly_trim(list(num))
        den = _poly_trim(list(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        # move pure powers of t between num/den and the shift
        while den and den[0] == 0:
            den.pop(0)
            shift -= 1
        while num and num[0] == 0:
            num.pop(0)
            shift += 1
        if not num:
            shift = 0
        self.num = num
        self.den = den
        self.shift = shift

    def simplified(self):
        if not self.num:
            return RationalFunction([], [1], 0)
        g = _poly_gcd(self.num, self.den)
        if len(g) > 1:
            num, _ = _poly_divmod(self.num, g)
            den, _ = _poly_divmod(self.den, g)
        else:
            num, den = list(self.num), list(self.den)

        def clear(p):
            lcm = 1
            for c in p:
                if isinstance(c, Fraction):
                    lcm = lcm // gcd(lcm, c.denominator) * c.denominator
            return [int(c * lcm) for c in p], lcm

        num, ln = clear(num)
        den, ld = clear(den)
        num, den = _poly_scale(num, ld), _poly_scale(den, ln)
        g0 = 0
        for c in num + den:
            g0 = gcd(g0, c)
        if g0 > 1:
            num = [c // g0 for c in num]
            den = [c // g0 for c in den]
        if den[0] < 0:
            num = [-c for c in num]
            den = [-c for c in den]
        return RationalFunction(num, den, self.shift)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(_poly_mul(self.num, other.num),
                                    _poly_mul(self.den, other.den),
                                    self.shift + other.shift)
        return RationalFunction(_poly_scale(self.num, other), self.den, self.shift)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction([other])
        shift = min(self.shift, other.shift)
        a = [0] * (self.shift - shift) + list(self.num)
        b = [0] * (other.shift - shift) + list(other.num)
        num = _poly_add(_poly_mul(a, other.den), _poly_mul(b, self.den))
        return RationalFunction(num, _poly_mul(self.den, other.den), shift)

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction([other])
        return self + (other * -1)

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction([other])
        d = (self - other).simplified()
        return not d.num

    def evaluate(self, t):
        t = Fraction(t)
        den = _poly_eval(self.den, t)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at %s" % t)
        val = _poly_eval(self.num, t) / den * t ** self.shift
        return int(val) if val.denominator == 1 else val

    def inverted(self):
        """The function t -> f(1/t), again as a RationalFunction."""
        if not self.num:
            return RationalFunction([], [1], 0)
        shift = -self.shift - (len(self.num) - 1) + (len(self.den) - 1)
        return RationalFunction(list(reversed(self.num)),
                                list(reversed(self.den)), shift)

    def __repr__(self):
        return "RationalFunction(t^%d * %s / %s)" % (self.shift, self.num, self.den)


def series_of(rf, truncation_order):
    """Expand a RationalFunction as a LaurentSeries up to the given order."""
    den = rf.den
    d0 = den[0]
    top = truncation_order - rf.shift
    if top < 0:
        return LaurentSeries({}, truncation_order)
    inv = [Fraction(1, 1) / Fraction(d0)]
    for n in range(1, top + 1):
        s = Fraction(0)
        for k in range(1, min(n, len(den) - 1) + 1):
            s += Fraction(den[k]) * inv[n - k]
        inv.append(-s / d0)
    coeffs = {}
    for i, c in enumerate(rf.num):
        if not c:
            continue
        for n in range(0, top - i + 1):
            coeffs[rf.shift + i + n] = coeffs.get(rf.shift + i + n, 0) + c * inv[n]
    out = {}
    for d, c in coeffs.items():
        c = Fraction(c)
        out[d] = int(c) if c.denominator == 1 else c
    return LaurentSeries(out, truncation_order)


def size_limit(rf):
    """Evaluate (1-t^2)^3 * rf at t=1 and divide by 4.

    This is the normalized leading behaviour used to compare graded growth
    rates; PoleAtMinusOne is raised when the product still has a pole and the
    limit does not exist.
    """
    g = (rf * RationalFunction([1, 0, -3, 0, 3, 0, -1])).simplified()
    if _poly_eval(g.den, Fraction(1)) == 0:
        raise PoleAtMinusOne("size limit does not exist: residual pole at the evaluation point")
    val = g.evaluate(1)
    q = Fraction(val, 4)
    return int(q) if q.denominator == 1 else q
