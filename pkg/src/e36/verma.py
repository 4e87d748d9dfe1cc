"""Induced modules for the height-graded exceptional algebra.

The negative part L_- of the algebra has a three-dimensional even piece
(the translations, written p1, p2, p3) sitting in degree -2 and a
six-dimensional odd piece in degree -1 spanned by the letters

    bit 0..2:  d1+, d2+, d3+      bit 3..5:  d1-, d2-, d3-

The translations are central in U(L_-); the letters anticommute up to a
translation ({di+, dj-} is a multiple of p_k for {i,j,k} = {1,2,3}).  A PBW
monomial is therefore a triple of translation exponents together with an
ordered subset of the six letters, encoded as

    LMonomial = (a1, a2, a3, mask)

with mask a 6-bit integer.  An induced module is U(L_-) tensor V for a
finite-dimensional module V over the degree-0 subalgebra, with the positive
part acting by commuting through the U(L_-) factor and killing 1 tensor V.

Twelve families of coefficient spaces V appear, named by SpaceId:

    "A"   polynomials in x1,x2,x3 and the two extra variables z+,z-
    "B"   polynomials in x1,x2,x3 and the symbols @+,@-, Y shifted by +2
    "C"   polynomials in the symbols @1,@2,@3 and z+,z-, Y shifted by -2
    "D"   polynomials in all five symbols
    "Ap".."Dp"   the same with the z/@z variables removed (one row of the grid)
    "App".."Dpp" the same with the x/@x variables removed (one column)

A VMonomial is a pair (xe, de) of five-tuples of exponents: xe for the
variables, de for the symbols; each SpaceId uses a fixed subset of slots
(0,1,2 are the x slots, 3,4 the z slots).  The component of bidegree (m,n)
collects the monomials with m = sum(xe-de over slots 0..2) and
n = sum(xe-de over slots 3,4).

All structure constants are taken from the polynomial model in
``algebra``; nothing here is transcribed by hand.
"""

from fractions import Fraction

from . import algebra
from .linalg import SparseMatrix

SPACE_IDS = ("A", "B", "C", "D", "Ap", "Bp", "Cp", "Dp", "App", "Bpp", "Cpp", "Dpp")

LETTER_IDS = ("d1+", "d2+", "d3+", "d1-", "d2-", "d3-")
HAT_IDS = ("p1", "p2", "p3")
G0_IDS = ("h1", "h2", "h3", "Y", "e1", "e2", "e3", "e12", "f1", "f2", "f3", "f12")
GPLUS_IDS = ("e0", "e0p")

TRIVIAL_LM = (0, 0, 0, 0)
ZERO5 = (0, 0, 0, 0, 0)
VM_ONE = (ZERO5, ZERO5)


def _twist3(space):
    if space[0] == "B":
        return 6
    if space[0] == "C":
        return -6
    return 0


# ---------------------------------------------------------------------------
# structure tables, all derived from the polynomial model
# ---------------------------------------------------------------------------

_T = {}


def _parse_letter_combo(el):
    """Constant-coefficient 2-form -> dict letter_index -> coeff."""
    out = {}
    for ((i, j), mono), c in el.odd.terms.items():
        assert mono == ZERO5 and i < 3 and j in (3, 4), el
        out[i + (0 if j == 3 else 3)] = c
    assert not el.even.terms, el
    return out


def _parse_hat_combo(el):
    out = {}
    for (slot, mono), c in el.even.terms.items():
        assert mono == ZERO5 and slot < 3, el
        out[slot] = c
    assert not el.odd.terms, el
    return out


def tables():
    """Bracket tables for the module layer, built once from the model."""
    if _T:
        return _T
    cat = algebra.generator_catalog()
    letters = [cat[g] for g in LETTER_IDS]
    hats = [cat[g] for g in HAT_IDS]

    pair = [[None] * 6 for _ in range(6)]
    for a in range(6):
        for b in range(6):
            br = algebra.bracket(letters[a], letters[b])
            assert not br.odd.terms
            if br.even.terms:
                combo = _parse_hat_combo(br)
                (k, c), = combo.items()
                pair[a][b] = (k, c)
    _T["pair"] = pair

    g0_field = {}
    for gid in G0_IDS + ("h0",):
        lst = []
        for (slot, mono), c in cat[gid].even.terms.items():
            s = mono.index(1)
            lst.append((s, slot, c))
        g0_field[gid] = lst
    _T["g0_field"] = g0_field

    g0_on_letter = {}
    g0_on_hat = {}
    for gid in G0_IDS + ("h0",):
        g0_on_letter[gid] = [_parse_letter_combo(algebra.bracket(cat[gid], letters[a]))
                             for a in range(6)]
        g0_on_hat[gid] = [_parse_hat_combo(algebra.bracket(cat[gid], hats[k]))
                          for k in range(3)]
    _T["g0_on_letter"] = g0_on_letter
    _T["g0_on_hat"] = g0_on_hat

    gp_on_letter = {}
    gp_on_hat = {}
    for gid in GPLUS_IDS:
        combos = []
        for a in range(6):
            sc = algebra.structure_constants(gid, LETTER_IDS[a])
            assert all(g in G0_IDS for g in sc), (gid, a, sc)
            combos.append(sc)
        gp_on_letter[gid] = combos
        gp_on_hat[gid] = [_parse_letter_combo(algebra.bracket(cat[gid], hats[k]))
                          for k in range(3)]
    _T["gp_on_letter"] = gp_on_letter
    _T["gp_on_hat"] = gp_on_hat

    lw = []
    for a in range(6):
        key = next(iter(letters[a].odd.terms))
        lw.append(algebra.term_weight("w", key))
    for k in range(3):
        key = next(iter(hats[k].even.terms))
        lw.append(algebra.term_weight("f", key))
    _T["letter_weight"] = lw[:6]
    _T["hat_weight"] = lw[6:]

    gen_weight = {}
    for gid in G0_IDS + ("h0",) + GPLUS_IDS:
        el = cat[gid]
        ws = {algebra.term_weight("f", k) for k in el.even.terms}
        ws |= {algebra.term_weight("w", k) for k in el.odd.terms}
        if len(ws) == 1:
            gen_weight[gid] = ws.pop()
        else:
            gen_weight[gid] = None  # not a weight vector (h0 is, Y is; e0 is)
    _T["gen_weight"] = gen_weight
    return _T


# ---------------------------------------------------------------------------
# PBW monomial arithmetic
# ---------------------------------------------------------------------------

_LMUL_CACHE = {}
_RMUL_CACHE = {}


def _lowbit(x):
    return (x & -x).bit_length() - 1


def _lmul_mask(b, mask, graded):
    """d_b times the ordered odd monomial ``mask``.

    Returns dict (mask', hat_index_or_None) -> integer coeff, where a hat
    index k means one extra translation p_k in front.
    """
    key = (b, mask, graded)
    hit = _LMUL_CACHE.get(key)
    if hit is not None:
        return hit
    low = mask & ((1 << b) - 1)
    if not low:
        out = {} if mask & (1 << b) else {(mask | (1 << b), None): 1}
    else:
        g = _lowbit(mask)
        rest = mask & ~(1 << g)
        out = {}
        pr = tables()["pair"][b][g]
        if pr is not None and not graded:
            out[(rest, pr[0])] = pr[1]
        for (m2, hat), c in _lmul_mask(b, rest, graded).items():
            k2 = (m2 | (1 << g), hat)
            out[k2] = out.get(k2, 0) - c
            if not out[k2]:
                del out[k2]
    _LMUL_CACHE[key] = out
    return out


def _rmul_mask(mask, b, graded):
    """The ordered odd monomial ``mask`` times d_b, same format as above."""
    key = (mask, b, graded)
    hit = _RMUL_CACHE.get(key)
    if hit is not None:
        return hit
    if not (mask >> (b + 1)):
        out = {} if mask & (1 << b) else {(mask | (1 << b), None): 1}
    else:
        g = mask.bit_length() - 1
        rest = mask & ~(1 << g)
        out = {}
        pr = tables()["pair"][g][b]
        if pr is not None and not graded:
            out[(rest, pr[0])] = pr[1]
        for (m2, hat), c in _rmul_mask(rest, b, graded).items():
            k2 = (m2 | (1 << g), hat)
            out[k2] = out.get(k2, 0) - c
            if not out[k2]:
                del out[k2]
    _RMUL_CACHE[key] = out
    return out


def _with_hat(lm_exps, hat):
    if hat is None:
        return lm_exps
    e = list(lm_exps)
    e[hat] += 1
    return tuple(e)


def rmul_letter(lm, b, graded=False):
    """LMonomial times letter b, as dict lm' -> coeff."""
    exps = lm[:3]
    out = {}
    for (m2, hat), c in _rmul_mask(lm[3], b, graded).items():
        out[_with_hat(exps, hat) + (m2,)] = c
    return out


def lmul_letter(b, lm, graded=False):
    """Letter b times LMonomial, as dict lm' -> coeff."""
    exps = lm[:3]
    out = {}
    for (m2, hat), c in _lmul_mask(b, lm[3], graded).items():
        out[_with_hat(exps, hat) + (m2,)] = c
    return out


def mul_hat(lm, k, power=1):
    e = list(lm[:3])
    e[k] += power
    return tuple(e) + (lm[3],)


def lm_ldegree(lm):
    return 2 * (lm[0] + lm[1] + lm[2]) + lm[3].bit_count()


def lm_factor_count(lm):
    return lm[0] + lm[1] + lm[2] + lm[3].bit_count()


def lm_weight(lm):
    t = tables()
    w = [0, 0, 0, 0]
    for k in range(3):
        if lm[k]:
            hw = t["hat_weight"][k]
            for i in range(4):
                w[i] += lm[k] * hw[i]
    mask = lm[3]
    while mask:
        b = _lowbit(mask)
        mask &= mask - 1
        bw = t["letter_weight"][b]
        for i in range(4):
            w[i] += bw[i]
    return tuple(w)


def mask_letters(mask):
    out = []
    while mask:
        b = _lowbit(mask)
        out.append(b)
        mask &= mask - 1
    return out


def pbw_normal_form(factor_ids, graded=False):
    """Normal form of a product of letters/translations given by name.

    factor_ids is a sequence over LETTER_IDS + HAT_IDS, multiplied in the
    written order.  Returns dict LMonomial -> coeff.
    """
    acc = {TRIVIAL_LM: 1}
    for fid in factor_ids:
        if fid in HAT_IDS:
            k = HAT_IDS.index(fid)
            acc = {mul_hat(lm, k): c for lm, c in acc.items()}
            continue
        b = LETTER_IDS.index(fid)
        nxt = {}
        for lm, c in acc.items():
            for lm2, c2 in rmul_letter(lm, b, graded).items():
                v = nxt.get(lm2, 0) + c * c2
                if v:
                    nxt[lm2] = v
                else:
                    del nxt[lm2]
        acc = nxt
    return acc


def lmonos_of_ldegree(d, max_hats=None):
    """All LMonomials of the given total degree (letters count 1, hats 2)."""
    out = []
    for mask in range(64):
        k = mask.bit_count()
        rem = d - k
        if rem < 0 or rem % 2:
            continue
        s = rem // 2
        if max_hats is not None and s > max_hats:
            continue
        for a1 in range(s + 1):
            for a2 in range(s - a1 + 1):
                out.append((a1, a2, s - a1 - a2, mask))
    return out


def lmonos_up_to(d):
    out = []
    for dd in range(d + 1):
        out.extend(lmonos_of_ldegree(dd))
    return out


# ---------------------------------------------------------------------------
# coefficient spaces
# ---------------------------------------------------------------------------


def _compositions(total, slots):
    if total < 0:
        return
    if slots == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, slots - 1):
            yield (head,) + rest


def vmonos_of(space, m, n):
    """All VMonomials of the (m, n) component, or [] when it is empty."""
    base = space[0]
    primed = space.endswith("p") and not space.endswith("pp")
    doubled = space.endswith("pp")
    if primed and n != 0:
        return []
    if doubled and m != 0:
        return []
    if base in ("A", "B"):
        if m < 0:
            return []
        xs = list(_compositions(m, 3))
    else:
        if m > 0:
            return []
        ds = list(_compositions(-m, 3))
    out = []
    if base == "A":
        if n < 0:
            return []
        for x3 in xs:
            for zz in _compositions(n, 2):
                out.append((x3 + zz, ZERO5))
    elif base == "B":
        if n > 0:
            return []
        for x3 in xs:
            for ww in _compositions(-n, 2):
                out.append((x3 + (0, 0), (0, 0, 0) + ww))
    elif base == "C":
        if n < 0:
            return []
        for d3 in ds:
            for zz in _compositions(n, 2):
                out.append(((0, 0, 0) + zz, d3 + (0, 0)))
    else:
        if n > 0:
            return []
        for d3 in ds:
            for ww in _compositions(-n, 2):
                out.append((ZERO5, d3 + ww))
    return out


def vm_component(vm):
    xe, de = vm
    return (xe[0] + xe[1] + xe[2] - de[0] - de[1] - de[2],
            xe[3] + xe[4] - de[3] - de[4])


def vm_weight(space, vm):
    xe, de = vm
    h1 = xe[0] - xe[1] - de[0] + de[1]
    h2 = xe[1] - xe[2] - de[1] + de[2]
    h3 = xe[3] - xe[4] - de[3] + de[4]
    y3 = (2 * (xe[0] + xe[1] + xe[2] - de[0] - de[1] - de[2])
          - 3 * (xe[3] + xe[4] - de[3] - de[4]) + _twist3(space))
    return (h1, h2, h3, y3)


def y3_component(space, m, n):
    """3Y eigenvalue of 1 tensor (any monomial of the (m,n) component)."""
    return 2 * m - 3 * n + _twist3(space)


def series_label(space, m, n):
    """(p, q, r) of the irreducible top of the (m, n) component."""
    base = space[0]
    if base == "A":
        return (m, 0, n)
    if base == "B":
        return (m, 0, -n)
    if base == "C":
        return (0, -m, n)
    return (0, -m, -n)


def term_weight(space, lm, vm):
    lw = lm_weight(lm)
    vw = vm_weight(space, vm)
    return tuple(lw[i] + vw[i] for i in range(4))


def term_degree(space, lm, vm):
    """-3Y of a basis term: PBW degree plus the component contribution."""
    m, n = vm_component(vm)
    return lm_ldegree(lm) - y3_component(space, m, n)


# ---------------------------------------------------------------------------
# module vectors
# ---------------------------------------------------------------------------


class ModuleVector:
    """Exact linear combination of (LMonomial, VMonomial) pairs."""

    __slots__ = ("space", "terms")

    def __init__(self, space, terms=None):
        self.space = space
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = c

    def add_term(self, lm, vm, c):
        if not c:
            return
        k = (lm, vm)
        v = self.terms.get(k, 0) + c
        if v:
            self.terms[k] = v
        else:
            del self.terms[k]

    def add_scaled(self, other, k=1):
        assert other.space == self.space
        for (lm, vm), c in other.terms.items():
            self.add_term(lm, vm, k * c)
        return self

    def scaled(self, k):
        return ModuleVector(self.space, {key: k * c for key, c in self.terms.items()})

    def __add__(self, other):
        return ModuleVector(self.space, self.terms).add_scaled(other)

    def __sub__(self, other):
        return ModuleVector(self.space, self.terms).add_scaled(other, -1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, ModuleVector) and self.space == other.space
                and self.terms == other.terms)

    def weight(self):
        ws = {term_weight(self.space, lm, vm) for (lm, vm) in self.terms}
        if len(ws) > 1:
            return None
        return ws.pop() if ws else None

    def component(self):
        cs = {vm_component(vm) for (_, vm) in self.terms}
        if len(cs) > 1:
            return None
        return cs.pop() if cs else None

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: repr(kv[0]))
        return "ModuleVector(%s, %r)" % (self.space, items)


def leftmul_letter_vec(b, vec, graded=False):
    out = ModuleVector(vec.space)
    for (lm, vm), c in vec.terms.items():
        for lm2, c2 in lmul_letter(b, lm, graded).items():
            out.add_term(lm2, vm, c * c2)
    return out


def leftmul_hat_vec(k, vec):
    out = ModuleVector(vec.space)
    for (lm, vm), c in vec.terms.items():
        out.add_term(mul_hat(lm, k), vm, c)
    return out


def leftmul_lmono_vec(u, vec, graded=False):
    """Multiply a vector by the PBW monomial u on the left."""
    out = vec
    for b in reversed(mask_letters(u[3])):
        out = leftmul_letter_vec(b, out, graded)
    if u[0] or u[1] or u[2]:
        res = ModuleVector(out.space)
        for (lm, vm), c in out.terms.items():
            res.add_term((lm[0] + u[0], lm[1] + u[1], lm[2] + u[2], lm[3]), vm, c)
        out = res
    return out


# ---------------------------------------------------------------------------
# generator actions
# ---------------------------------------------------------------------------


def _act_field_vm(space, gid, vm):
    """Action of a degree-0 generator on a single VMonomial.

    Yields (vm', coeff).  The Y twist of the space is included.
    """
    t = tables()
    xe, de = vm
    for (s, tgt, c) in t["g0_field"][gid]:
        if xe[tgt]:
            ne = list(xe)
            k = ne[tgt]
            ne[tgt] -= 1
            ne[s] += 1
            yield ((tuple(ne), de), c * k)
        if de[s]:
            ne = list(de)
            k = ne[s]
            ne[s] -= 1
            ne[tgt] += 1
            yield ((xe, tuple(ne)), -c * k)
    if gid == "Y":
        tw = _twist3(space)
        if tw:
            yield (vm, Fraction(tw, 3))


def _replace_letter_at(lm, pos, b, graded, acc, coeff):
    """Into ``acc`` add: (letters before pos) d_b (letters after pos), scaled."""
    letters = mask_letters(lm[3])
    before = letters[:pos]
    after_mask = 0
    for x in letters[pos + 1:]:
        after_mask |= 1 << x
    sub = {(lm[0], lm[1], lm[2], after_mask): coeff}
    chain = [b] + list(reversed(before))
    for bb in chain:
        nxt = {}
        for lmx, cx in sub.items():
            for lm2, c2 in lmul_letter(bb, lmx, graded).items():
                v = nxt.get(lm2, 0) + cx * c2
                if v:
                    nxt[lm2] = v
                else:
                    del nxt[lm2]
        sub = nxt
    for lm2, c2 in sub.items():
        v = acc.get(lm2, 0) + c2
        if v:
            acc[lm2] = v
        else:
            del acc[lm2]


_G0_LMONO_CACHE = {}
_G0_VMONO_CACHE = {}


def g0_on_lmono(gid, lm, graded=False):
    """Rows (lm', c) of a degree-0 generator acting on the PBW factors.

    The action of g0 on a module term splits into this letter-and-hat
    part, which keeps the top monomial, plus g0_on_vmono, which keeps
    the PBW monomial; both are memoized.
    """
    key = (gid, lm, graded)
    hit = _G0_LMONO_CACHE.get(key)
    if hit is None:
        t = tables()
        on_letter = t["g0_on_letter"][gid]
        on_hat = t["g0_on_hat"][gid]
        acc = {}
        for k in range(3):
            if lm[k]:
                for j, cj in on_hat[k].items():
                    e = list(lm[:3])
                    e[k] -= 1
                    e[j] += 1
                    lm2 = tuple(e) + (lm[3],)
                    v = acc.get(lm2, 0) + lm[k] * cj
                    if v:
                        acc[lm2] = v
                    else:
                        del acc[lm2]
        for pos, a in enumerate(mask_letters(lm[3])):
            for b, cb in on_letter[a].items():
                _replace_letter_at(lm, pos, b, graded, acc, cb)
        hit = tuple(acc.items())
        _G0_LMONO_CACHE[key] = hit
    return hit


def g0_on_vmono(space, gid, vm):
    """Rows (vm', c) of a degree-0 generator acting on a top monomial."""
    key = (space, gid, vm)
    hit = _G0_VMONO_CACHE.get(key)
    if hit is None:
        acc = {}
        for vm2, c in _act_field_vm(space, gid, vm):
            v = acc.get(vm2, 0) + c
            if v:
                acc[vm2] = v
            else:
                del acc[vm2]
        hit = tuple(acc.items())
        _G0_VMONO_CACHE[key] = hit
    return hit


def act_g0(gid, vec, graded=False):
    """Action of a degree-0 catalog generator on a module vector."""
    out = ModuleVector(vec.space)
    for (lm, vm), c in vec.terms.items():
        for lm2, c2 in g0_on_lmono(gid, lm, graded):
            out.add_term(lm2, vm, c * c2)
        for vm2, c2 in g0_on_vmono(vec.space, gid, vm):
            out.add_term(lm, vm2, c * c2)
    return out


_GPLUS_CACHE = {}


def _act_gplus_term(gid, space, lm, vm, graded):
    key = (gid, space, lm, vm, graded)
    hit = _GPLUS_CACHE.get(key)
    if hit is not None:
        return hit
    t = tables()
    out = ModuleVector(space)
    if lm[0] or lm[1] or lm[2]:
        k = 0 if lm[0] else (1 if lm[1] else 2)
        e = list(lm[:3])
        e[k] -= 1
        rest = tuple(e) + (lm[3],)
        # [g, p_k] is a combination of letters, left-multiplied onto the rest
        sub = ModuleVector(space, {(rest, vm): 1})
        for b, cb in t["gp_on_hat"][gid][k].items():
            out.add_scaled(leftmul_letter_vec(b, sub, graded), cb)
        deeper = _act_gplus_term(gid, space, rest, vm, graded)
        out.add_scaled(leftmul_hat_vec(k, deeper))
    elif lm[3]:
        a = _lowbit(lm[3])
        rest = lm[:3] + (lm[3] & ~(1 << a),)
        sub = ModuleVector(space, {(rest, vm): 1})
        for g0id, cg in t["gp_on_letter"][gid][a].items():
            out.add_scaled(act_g0(g0id, sub, graded), cg)
        deeper = _act_gplus_term(gid, space, rest, vm, graded)
        out.add_scaled(leftmul_letter_vec(a, deeper, graded), -1)
    _GPLUS_CACHE[key] = out
    return out


def act_gplus(gid, vec, graded=False):
    """Action of e0 or e0p (degree +1) on a module vector."""
    out = ModuleVector(vec.space)
    for (lm, vm), c in vec.terms.items():
        out.add_scaled(_act_gplus_term(gid, vec.space, lm, vm, graded), c)
    return out


def gplus_on_key(gid, space, lm, vm, graded=False):
    """Terms {key: c} of e0 or e0p acting on one module key, memoized.

    The returned dict is shared with the memo; treat it as read-only.
    """
    return _act_gplus_term(gid, space, lm, vm, graded).terms


def clear_gplus_cache():
    """Drop the memoized e0/e0p actions.

    The memo is keyed by full module keys, so sweeping the bases of many
    components grows it without reuse; callers doing such sweeps can trim
    it between components.
    """
    _GPLUS_CACHE.clear()


def act(gid, vec, graded=False):
    """Module action of any catalog generator."""
    if gid in GPLUS_IDS:
        return act_gplus(gid, vec, graded)
    if gid in G0_IDS or gid == "h0":
        return act_g0(gid, vec, graded)
    if gid == "f0":
        gid = "d1+"
    if gid in LETTER_IDS:
        return leftmul_letter_vec(LETTER_IDS.index(gid), vec, graded)
    if gid in HAT_IDS:
        return leftmul_hat_vec(HAT_IDS.index(gid), vec)
    raise KeyError(gid)


# ---------------------------------------------------------------------------
# component bases and highest weight vectors
# ---------------------------------------------------------------------------


def component_basis(space, m, n, max_ldegree, graded=False):
    """Basis keys (lm, vm) of the (m,n) component up to the letter degree.

    With graded=True the translations are dropped (exterior-algebra model of
    the associated graded): only pure letter monomials appear.
    """
    vms = vmonos_of(space, m, n)
    if not vms:
        return []
    out = []
    for lm in lmonos_up_to(max_ldegree):
        if graded and (lm[0] or lm[1] or lm[2]):
            continue
        for vm in vms:
            out.append((lm, vm))
    return out


def weight_blocks(space, keys):
    blocks = {}
    for key in keys:
        w = term_weight(space, key[0], key[1])
        blocks.setdefault(w, []).append(key)
    return blocks


def _dominant(w):
    return w[0] >= 0 and w[1] >= 0 and w[2] >= 0


def highest_weight_vectors(space, m, n, max_ldegree, include_gplus=True,
                           dominant_only=True, graded=False):
    """Joint kernel of the raising operators on a truncated component.

    Returns a list of ModuleVectors, each a weight vector killed by e1, e2,
    e3 (and e0, e0p when include_gplus is set).  Only weight blocks with
    dominant (h1,h2,h3) are searched when dominant_only is set, which is
    safe: a highest weight vector is a weight vector with dominant integral
    weight.
    """
    keys = component_basis(space, m, n, max_ldegree, graded)
    blocks = weight_blocks(space, keys)
    gens = ["e1", "e2", "e3"] + (list(GPLUS_IDS) if include_gplus else [])
    found = []
    for w, basis in sorted(blocks.items()):
        if dominant_only and not _dominant(w):
            continue
        index = {}
        cols = []
        for key in basis:
            vec = ModuleVector(space, {key: 1})
            col = {}
            for gi, gid in enumerate(gens):
                img = act(gid, vec, graded)
                for k2, c2 in img.terms.items():
                    row = index.setdefault((gi, k2), len(index))
                    col[row] = col.get(row, 0) + c2
            cols.append(col)
        mat = SparseMatrix.from_columns(cols, len(index))
        for kv in mat.kernel_basis():
            vec = ModuleVector(space)
            for j, c in kv.items():
                vec.add_term(basis[j][0], basis[j][1], c)
            found.append(vec)
    return found


def clear_caches():
    _LMUL_CACHE.clear()
    _RMUL_CACHE.clear()
    _GPLUS_CACHE.clear()
    _G0_LMONO_CACHE.clear()
    _G0_VMONO_CACHE.clear()
