"""Reduced zero-dimensional subschemes of P1 x P1 given as lists of points.

Ideal-sheaf cohomology comes from the evaluation matrix of the monomial basis
of H^0(O(d)) at the points.  Global generation of I_Z(d) is decided by a
chain of exact certificates (vanishing criterion, saturation, line and
intersection-count obstructions, base points over a prime field), with an
``inconclusive`` verdict when none of them applies.
"""

from fractions import Fraction
import json
from math import gcd
import random

import numpy as np

from .cox import BiForm, basis, h_line
from .linalg import QQ, PRIMES, PrimeField, kernel_basis, rank


def normalize_pair(pair, field=QQ):
    x, y = field(pair[0]), field(pair[1])
    if x:
        inv = field.inv(x)
        return (field(1), field(y * inv))
    if y:
        return (field(0), field(1))
    raise ValueError("(0,0) is not a point of P1")


class PointSet:
    """Distinct points ((s0,s1),(t0,t1)) over Q or F_p, normalized."""

    def __init__(self, points, field=QQ):
        self.field = field
        norm = []
        seen = set()
        for s, t in points:
            pt = (normalize_pair(s, field), normalize_pair(t, field))
            if pt in seen:
                raise ValueError(f"repeated point {pt}")
            seen.add(pt)
            norm.append(pt)
        self.points = norm

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def degree(self):
        return len(self.points)

    def without(self, k):
        return PointSet(self.points[:k] + self.points[k + 1:], self.field)

    def subset(self, idx):
        return PointSet([self.points[k] for k in idx], self.field)

    def __contains__(self, pt):
        return pt in set(self.points)

    def to_json(self):
        return {"field": self.field.name,
                "points": [[[str(x) for x in s], [str(x) for x in t]] for s, t in self.points]}

    @classmethod
    def from_json(cls, obj):
        from .linalg import field_from_name
        try:
            field = field_from_name(obj.get("field", "Q"))
            pts = [((Fraction(s[0]), Fraction(s[1])), (Fraction(t[0]), Fraction(t[1])))
                   for s, t in obj["points"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed point set JSON: {exc}") from exc
        return cls(pts, field)

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def eval_matrix(Z, d):
    f = Z.field
    mons = basis(0, tuple(d))
    rows = []
    for (s0, s1), (t0, t1) in Z:
        rows.append([f(s0 ** e[0] * s1 ** e[1] * t0 ** e[2] * t1 ** e[3]) for e in mons])
    return rows


def _eval_rank(Z, d):
    if not len(Z) or h_line(0, d) == 0:
        return 0
    return rank(eval_matrix(Z, d), Z.field)


def ideal_cohomology(Z, d):
    d = tuple(d)
    rho = _eval_rank(Z, d)
    return (h_line(0, d) - rho, h_line(1, d) + len(Z) - rho, h_line(2, d))


def sections(Z, d):
    """Basis of H^0(I_Z(d)) as forms."""
    d = tuple(d)
    n = h_line(0, d)
    if n == 0:
        return []
    mons = basis(0, d)
    if len(Z):
        kern = kernel_basis(eval_matrix(Z, d), Z.field, n)
    else:
        kern = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    return [BiForm(d[0], d[1], {(m[0], m[2]): c for m, c in zip(mons, v) if c}) for v in kern]


def cayley_bacharach(Z, d):
    d = tuple(d)
    if d[0] < 0 or d[1] < 0:
        return True
    full = ideal_cohomology(Z, d)[0]
    return all(ideal_cohomology(Z.without(k), d)[0] == full for k in range(len(Z)))


# Divisors and residual schemes

class LineDivisor:
    """A curve D given by ruling lines or by one form.

    ``components`` holds ("first", (r0, r1)) for the line {s = r} of bidegree
    (1,0) and ("second", (r0, r1)) for {t = r} of bidegree (0,1).
    """

    def __init__(self, components=None, form=None):
        if (components is None) == (form is None):
            raise ValueError("give either components or a form")
        self.components = None
        if components is not None:
            comps = [(kind, tuple(root)) for kind, root in components]
            if len(set(comps)) != len(comps):
                raise ValueError("components must be distinct")
            for kind, _ in comps:
                if kind not in ("first", "second"):
                    raise ValueError(f"unknown ruling {kind!r}")
            self.components = comps
            form = BiForm.one()
            for kind, (r0, r1) in comps:
                if kind == "first":
                    form = form * BiForm(1, 0, {(0, 0): r0, (1, 0): -r1})
                else:
                    form = form * BiForm(0, 1, {(0, 0): r0, (0, 1): -r1})
        self.form = form

    @property
    def bidegree(self):
        return self.form.bidegree

    def contains(self, pt, field=QQ):
        return self.form.evaluate(pt[0], pt[1], field) == 0


def residual(Z, D):
    return PointSet([p for p in Z if not D.contains(p, Z.field)], Z.field)


def intersection(Z, D):
    return PointSet([p for p in Z if D.contains(p, Z.field)], Z.field)


def _chi_line(d):
    return (d[0] + 1) * (d[1] + 1)


def residual_sequence_check(Z, D, m, n):
    """Check the residual sequence identities for D of bidegree (u,v) on this instance.

    Sections of O_D(m,n) are computed as restrictions from Q, which needs
    h^1(O(m-u, n-v)) = 0.
    """
    if D.form is None:
        raise ValueError("D must have a pure bidegree")
    u, v = D.bidegree
    lo = (m - u, n - v)
    if h_line(1, lo) != 0:
        raise ValueError("residual check needs h^1(O(m-u, n-v)) = 0")
    res = residual(Z, D)
    on = intersection(Z, D)
    chi_z = _chi_line((m, n)) - len(Z)
    chi_res = _chi_line(lo) - len(res)
    chi_d = _chi_line((m, n)) - _chi_line(lo) - len(on)
    identity = chi_z == chi_res + chi_d
    # H^2(O(lo)) -> H^2(O(m,n)) is multiplication by the equation of D
    from .cox import mult_matrix
    mm = mult_matrix(D.form, 2, lo)
    r2 = rank(mm, Z.field) if mm and mm[0] else 0
    h1_od = h_line(1, (m, n)) + h_line(2, lo) - r2
    rho_d = _eval_rank(on, (m, n))
    h1_ideal_d = len(on) - rho_d + h1_od
    h1_z = ideal_cohomology(Z, (m, n))[1]
    h1_res = ideal_cohomology(res, lo)[1]
    additive = len(Z) == len(on) + len(res)
    return identity and additive and h1_z <= h1_res + h1_ideal_d


# Global generation of I_Z(d)

def _bm_vanishing(Z, d):
    a, b = d
    return (ideal_cohomology(Z, (a - 1, b))[1] == 0 and ideal_cohomology(Z, (a, b - 1))[1] == 0
            and ideal_cohomology(Z, (a - 1, b - 1))[2] == 0)


def _line_obstruction(Z, d):
    """A ruling line through more points than the restricted degree is in the base locus."""
    a, b = d
    by_s, by_t = {}, {}
    for s, t in Z:
        by_s[s] = by_s.get(s, 0) + 1
        by_t[t] = by_t.get(t, 0) + 1
    return any(c > b for c in by_s.values()) or any(c > a for c in by_t.values())


def _chart_derivative(pair, d0, d1):
    # affine coordinate is the non-normalized entry of the pair
    return d1 if pair[0] == 1 else d0


def gradient_ok(Z, V):
    f = Z.field
    parts = [g.partials() for g in V]
    for s, t in Z:
        m = []
        for (ds0, ds1, dt0, dt1) in parts:
            gs = _chart_derivative(s, ds0, ds1)
            gt = _chart_derivative(t, dt0, dt1)
            m.append([gs.evaluate(s, t, f), gt.evaluate(s, t, f)])
        if rank(m, f) < 2:
            return False
    return True


def saturation_certificate(Z, d, V, kmax=3):
    """Smallest k with V * H^0(O(k,k)) = H^0(I_Z(d + (k,k))) and the vanishing criterion at d + (k,k)."""
    a, b = d
    f = Z.field
    for k in range(kmax + 1):
        D = (a + k, b + k)
        if not _bm_vanishing(Z, D):
            continue
        target = ideal_cohomology(Z, D)[0]
        mons = [BiForm.monomial(k, k, i, j) for i in range(k + 1) for j in range(k + 1)]
        idx = {m: c for c, m in enumerate(basis(0, D))}
        rows = []
        for g in V:
            for mo in mons:
                prod = g * mo
                row = [0] * len(idx)
                for e, c in prod.terms():
                    row[idx[e]] = c
                rows.append(row)
        if rows and rank(rows, f) == target:
            return k
    return None


def _forms_mod_p(V, p):
    out = []
    for g in V:
        den = 1
        for c in g.coeffs.values():
            den = den * c.denominator // gcd(den, c.denominator)
        if den % p == 0:
            return None
        inv = pow(den, -1, p)
        arr = np.zeros((g.a + 1, g.b + 1), dtype=np.int64)
        for (i, j), c in g.coeffs.items():
            arr[i, j] = int(c * den) % p * inv % p
        out.append(arr)
    return out


def _poly_vals(arr, s0, s1, p):
    """c_j(s) = sum_i arr[i, j] s0^i s1^(a-i) for vectors s0, s1; shape (len(s), b+1)."""
    a = arr.shape[0] - 1
    out = np.zeros((len(s0), arr.shape[1]), dtype=np.int64)
    p0 = np.ones_like(s0)
    pw0 = [p0]
    for _ in range(a):
        pw0.append(pw0[-1] * s0 % p)
    pw1 = [np.ones_like(s1)]
    for _ in range(a):
        pw1.append(pw1[-1] * s1 % p)
    for i in range(a + 1):
        mon = pw0[i] * pw1[a - i] % p
        for j in range(arr.shape[1]):
            if arr[i, j]:
                out[:, j] = (out[:, j] + mon * arr[i, j]) % p
    return out


def _p1_points(p):
    s0 = np.concatenate([np.ones(p, dtype=np.int64), np.zeros(1, dtype=np.int64)])
    s1 = np.concatenate([np.arange(p, dtype=np.int64), np.ones(1, dtype=np.int64)])
    return s0, s1


def _t_vals(coeffs, t0, t1, p):
    """Evaluate binary forms with coefficient rows (len k, b+1) at many t."""
    b = coeffs.shape[-1] - 1
    out = np.zeros((coeffs.shape[0], len(t0)), dtype=np.int64)
    for j in range(b + 1):
        mon = np.ones_like(t0)
        for _ in range(j):
            mon = mon * t0 % p
        for _ in range(b - j):
            mon = mon * t1 % p
        out = (out + np.outer(coeffs[:, j], mon)) % p
    return out


def base_points_fp(V, d, p, exclude=(), limit=1):
    """Common zeros of the forms V on Q(F_p) outside ``exclude`` (up to ``limit``)."""
    a, b = d
    arrs = _forms_mod_p(V, p)
    if arrs is None or not arrs:
        return []
    swap = False
    if b > 2 and a <= 2:
        arrs = [x.T.copy() for x in arrs]
        a, b = b, a
        swap = True
    excl = set()
    for s, t in exclude:
        key = ((int(s[0]) % p, int(s[1]) % p), (int(t[0]) % p, int(t[1]) % p))
        excl.add((key[1], key[0]) if swap else key)
    found = []
    s0, s1 = _p1_points(p)
    vals = np.stack([_poly_vals(x, s0, s1, p) for x in arrs])  # (k, S, b+1)
    t0a, t1a = _p1_points(p)

    def verify(idx, cand):
        out = []
        for t in cand:
            tv = _t_vals(vals[:, idx, :], np.array([t[0]]), np.array([t[1]]), p)
            if not tv.any():
                pt = ((int(s0[idx]), int(s1[idx])), t)
                if pt not in excl:
                    out.append(pt)
        return out

    def brute(idx):
        tv = _t_vals(vals[:, idx, :], t0a, t1a, p)
        hits = np.nonzero(~tv.any(axis=0))[0]
        return verify(idx, [(int(t0a[h]), int(t1a[h])) for h in hits])

    if b > 2:
        # no closed form for the candidate roots; exhaustive for small p, sampled otherwise
        rng = np.random.default_rng(p)
        idxs = range(len(s0)) if p <= 101 else rng.choice(len(s0), size=min(len(s0), 400), replace=False)
        for idx in idxs:
            found += brute(int(idx))
            if len(found) >= limit:
                break
        return _unswap(found[:limit], swap)
    f = vals[0]
    g = vals[1] if len(vals) > 1 else np.zeros_like(f)
    zero_f = ~f.any(axis=1)
    zero_g = ~g.any(axis=1)
    if b == 0:
        cand_rows = np.nonzero(~vals[:, :, 0].any(axis=0))[0]
        for idx in cand_rows:
            found += brute(int(idx))
            if len(found) >= limit:
                break
        return _unswap(found[:limit], swap)
    if b == 1:
        det = (f[:, 1] * g[:, 0] - f[:, 0] * g[:, 1]) % p
        cand_rows = np.nonzero((det == 0))[0]
        for idx in cand_rows:
            if zero_f[idx] or zero_g[idx]:
                found += brute(int(idx))
            else:
                found += verify(int(idx), _norm_t_list([(-int(f[idx, 0]), int(f[idx, 1]))], p))
            if len(found) >= limit:
                break
        return _unswap(found[:limit], swap)
    a0, a1, a2 = f[:, 0], f[:, 1], f[:, 2]
    b0, b1, b2 = g[:, 0], g[:, 1], g[:, 2]
    x = (a2 * b0 - a0 * b2) % p
    y = (a2 * b1 - a1 * b2) % p
    z = (a1 * b0 - a0 * b1) % p
    res = (x * x - y * z) % p
    cand_rows = np.nonzero(res == 0)[0]
    for idx in cand_rows:
        i = int(idx)
        num = (-(int(a0[i]) * int(b2[i]) - int(a2[i]) * int(b0[i]))) % p
        den = (int(a1[i]) * int(b2[i]) - int(a2[i]) * int(b1[i])) % p
        if zero_f[i] or zero_g[i] or (num == 0 and den == 0):
            found += brute(i)
        else:
            cand = [(num, den)]
            if a2[i] == 0 and b2[i] == 0:
                cand.append((1, 0))
            found += verify(i, _norm_t_list(cand, p))
        if len(found) >= limit:
            break
    return _unswap(found[:limit], swap)


def _norm_t_list(cands, p):
    out = []
    for t0, t1 in cands:
        t0, t1 = t0 % p, t1 % p
        if t0:
            out.append((1, t1 * pow(t0, -1, p) % p))
        elif t1:
            out.append((0, 1))
    return out


def _unswap(found, swap):
    return [(t, s) for s, t in found] if swap else found


def gg_ideal_report(Z, d, primes=PRIMES, kmax=3):
    """(verdict, reason) for global generation of I_Z(d)."""
    d = tuple(d)
    if d[0] < 0 or d[1] < 0:
        raise ValueError("d must be nonnegative")
    if _bm_vanishing(Z, d):
        return "gg_certified", "vanishing criterion"
    if _line_obstruction(Z, d):
        return "not_gg", "ruling line in base locus"
    V = sections(Z, d)
    if len(V) <= 1:
        return "not_gg", "at most one section"
    if not gradient_ok(Z, V):
        return "not_gg", "sections do not generate the fiber at a point of Z"
    if len(V) == 2 and 2 * d[0] * d[1] > len(Z):
        return "not_gg", "two sections meet in more points than Z"
    field = Z.field
    if field != QQ:
        pts = base_points_fp(V, d, field.p, exclude=Z.points)
        if pts:
            return "not_gg", f"base point {pts[0]} over F_{field.p}"
    k = saturation_certificate(Z, d, V, kmax)
    if k is not None:
        return "gg_certified", f"sections generate in degree +({k},{k})"
    if field == QQ:
        hits, usable = 0, 0
        for p in primes:
            zp = _reduce_points(Z, p)
            if zp is None or _forms_mod_p(V, p) is None:
                continue
            if rank(eval_matrix(zp, d), PrimeField(p)) != _eval_rank(Z, d):
                continue
            usable += 1
            if base_points_fp(V, d, p, exclude=zp.points):
                hits += 1
        if usable >= 3 and hits == usable:
            return "not_gg", "base points off Z modulo every usable prime"
    return "inconclusive", "no certificate applies"


def _reduce_points(Z, p):
    F = PrimeField(p)
    try:
        return PointSet([(tuple(F(x) for x in s), tuple(F(x) for x in t)) for s, t in Z], F)
    except (ZeroDivisionError, ValueError):
        return None


def is_gg_ideal(Z, d, primes=PRIMES):
    return gg_ideal_report(Z, d, primes)[0]


# Random configurations

def random_point(rng, field, bound=50):
    def coord():
        if field == QQ:
            x = rng.randint(-bound, bound)
            return (1, x) if rng.random() > 0.02 else (0, 1)
        x = rng.randrange(field.p + 1)
        return (0, 1) if x == field.p else (1, x)
    return (coord(), coord())


def random_points(rng, n, field=QQ, general=False, bound=50):
    """n distinct random points; ``general`` forbids two on a ruling line."""
    pts = []
    seen = set()
    while len(pts) < n:
        s, t = random_point(rng, field, bound)
        s, t = normalize_pair(s, field), normalize_pair(t, field)
        if (s, t) in seen:
            continue
        if general and any(s == q[0] or t == q[1] for q in pts):
            continue
        seen.add((s, t))
        pts.append((s, t))
    return PointSet(pts, field)


def general_points(n, seed=0, field=QQ):
    return random_points(random.Random(seed), n, field, general=True)


def two_line_configuration(rng, k1, k2, corner=False, bound=50):
    """Points on L1 u L2 for a random line L1 = {s = r} and L2 = {t = q}.

    k1 points lie on L1 and k2 on L2, away from the corner L1 n L2, which is
    added when ``corner`` is set.  Returns (Z, L1, L2).
    """
    r = normalize_pair(random_point(rng, QQ, bound)[0])
    q = normalize_pair(random_point(rng, QQ, bound)[1])
    pts = [(r, q)] if corner else []
    while len(pts) < k1 + corner:
        t = normalize_pair(random_point(rng, QQ, bound)[1])
        if t != q and (r, t) not in pts:
            pts.append((r, t))
    while len(pts) < k1 + k2 + corner:
        s = normalize_pair(random_point(rng, QQ, bound)[0])
        if s != r and (s, q) not in pts:
            pts.append((s, q))
    L1 = LineDivisor(components=[("first", r)])
    L2 = LineDivisor(components=[("second", q)])
    return PointSet(pts), L1, L2


# Polynomials in one variable over a field, coefficient lists (low degree first)

def _padd(f, g, F):
    n = max(len(f), len(g))
    return [F((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) for i in range(n)]


def _pmul(f, g, F):
    out = [F(0)] * (len(f) + len(g) - 1) if f and g else []
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] = F(out[i + j] + x * y)
    return out


def _pneg(f, F):
    return [F(-x) for x in f]


def _ptrim(f):
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def _pdiv_linear(f, r, F):
    """Divide by (x - r); returns (quotient, remainder)."""
    f = _ptrim(f)
    if not f:
        return [], F(0)
    q = [F(0)] * (len(f) - 1)
    acc = F(0)
    for i in range(len(f) - 1, -1, -1):
        acc = F(f[i] + acc * r)
        if i:
            q[i - 1] = acc
    return q, acc


def _t_coeff_polys(g, F):
    """For s = (1, x): coefficient of t0^j t1^(b-j) as a polynomial in x."""
    out = []
    for j in range(g.b + 1):
        poly = [F(0)] * (g.a + 1)
        for (i, jj), c in g.coeffs.items():
            if jj == j:
                poly[g.a - i] = F(poly[g.a - i] + F(c))
        out.append(poly)
    return out


def complete_intersection_8(seed=0, field=QQ, tries=50):
    """8 distinct points cut out by two (2,2) forms, all with coordinates in ``field``.

    Seven points are drawn at random; the pencil through them has an eighth
    base point, which is rational because the other seven are.
    """
    rng = random.Random(seed)
    F = field
    for _ in range(tries):
        Z7 = random_points(rng, 7, field, general=True)
        if any(s[0] == 0 for s, _ in Z7):
            continue
        V = sections(Z7, (2, 2))
        if len(V) != 2:
            continue
        f, g = V
        a = _t_coeff_polys(f, F)
        b = _t_coeff_polys(g, F)
        # homogeneous resultant of the two binary quadratics in t (coefficient of t0^j is a_j)
        x = _padd(_pmul(a[2], b[0], F), _pneg(_pmul(a[0], b[2], F), F), F)
        y = _padd(_pmul(a[2], b[1], F), _pneg(_pmul(a[1], b[2], F), F), F)
        z = _padd(_pmul(a[1], b[0], F), _pneg(_pmul(a[0], b[1], F), F), F)
        res = _ptrim(_padd(_pmul(x, x, F), _pneg(_pmul(y, z, F), F), F))
        ok = True
        for (s0, s1), _t in Z7:
            res, rem = _pdiv_linear(res, s1, F)
            if rem:
                ok = False
                break
        res = _ptrim(res)
        if not ok or len(res) != 2:
            continue
        x8 = F(-res[0] * F.inv(res[1]))
        if any(s[1] == x8 for s, _ in Z7):
            continue
        s8 = (F(1), x8)
        fa = [F(sum(F(cf) * F(x8) ** k for k, cf in enumerate(pp))) for pp in a]
        gb = [F(sum(F(cf) * F(x8) ** k for k, cf in enumerate(pp))) for pp in b]
        num = F(-(fa[0] * gb[2] - fa[2] * gb[0]))
        den = F(fa[1] * gb[2] - fa[2] * gb[1])
        if num == 0 and den == 0:
            continue
        t8 = normalize_pair((num, den), F)
        if any(t == t8 for _, t in Z7):
            continue
        if f.evaluate(s8, t8, F) == 0 and g.evaluate(s8, t8, F) == 0:
            return PointSet(Z7.points + [(s8, t8)], F), (f, g)
    raise RuntimeError("could not build a complete intersection")


def _sqrt_mod(a, p):
    from sympy.ntheory import sqrt_mod
    return sqrt_mod(a % p, p)


def _points_on_curve(g, n, rng, F, avoid_lines=True):
    """n distinct F_p-points on the curve g = 0 (t-degree at most 2)."""
    p = F.p
    pts = []
    seen = set()
    guard = 0
    while len(pts) < n:
        guard += 1
        if guard > 200000:
            raise RuntimeError("curve has too few rational points")
        x = rng.randrange(p)
        s = (1, x)
        c = [sum(int(cf) * pow(x, g.a - i, p) for (i, jj), cf in g.coeffs.items() if jj == j) % p
             for j in range(g.b + 1)]
        roots = []
        if g.b == 1:
            if c[1]:
                roots.append(normalize_pair((-c[0] % p, c[1]), F))
        elif g.b == 2:
            A, B, C = c[2], c[1], c[0]
            if A == 0:
                if B:
                    roots.append(normalize_pair((-C % p, B), F))
                roots.append((1, 0))
            else:
                disc = (B * B - 4 * A * C) % p
                r = _sqrt_mod(disc, p)
                if r is None:
                    continue
                inv2a = pow(2 * A, -1, p)
                for sg in (1, -1):
                    roots.append(normalize_pair(((-B + sg * r) * inv2a % p, 1), F))
        if not roots:
            continue
        t = roots[rng.randrange(len(roots))]
        pt = (normalize_pair(s, F), t)
        if pt in seen:
            continue
        if avoid_lines and (sum(1 for q in pts if q[0] == pt[0]) >= 2 or sum(1 for q in pts if q[1] == pt[1]) >= 2):
            continue
        seen.add(pt)
        pts.append(pt)
    return pts


def length7_family(name, rng, F):
    """One 7-point configuration over F_p of the named family."""
    if name == "uniform":
        return random_points(rng, 7, F)
    if name == "conic11":
        g = BiForm.random(1, 1, rng, 1, F.p - 1)
        return PointSet(_points_on_curve(g, 7, rng, F), F)
    if name == "curve12":
        g = BiForm.random(2, 1, rng, 1, F.p - 1)
        pts = _points_on_curve(g, 7, rng, F)
        return PointSet([(t, s) for s, t in pts], F)
    if name == "curve22":
        g = BiForm.random(2, 2, rng, 1, F.p - 1)
        return PointSet(_points_on_curve(g, 7, rng, F), F)
    if name == "ci8_minus_one":
        Z, _ = complete_intersection_8(rng.randrange(10 ** 9), F)
        k = rng.randrange(8)
        return Z.without(k)
    if name == "three_on_ruling":
        s = normalize_pair((1, rng.randrange(F.p)), F)
        pts = set()
        while len(pts) < 3:
            pts.add((s, normalize_pair((1, rng.randrange(F.p)), F)))
        pts = list(pts)
        while len(pts) < 7:
            q = random_point(rng, F)
            q = (normalize_pair(q[0], F), normalize_pair(q[1], F))
            if q not in pts:
                pts.append(q)
        return PointSet(pts, F)
    if name == "near_ci":
        Z, _ = complete_intersection_8(rng.randrange(10 ** 9), F)
        keep = rng.sample(range(8), 6)
        pts = [Z.points[k] for k in keep]
        while len(pts) < 7:
            q = random_point(rng, F)
            q = (normalize_pair(q[0], F), normalize_pair(q[1], F))
            if q not in Z.points:
                pts.append(q)
        return PointSet(pts, F)
    raise ValueError(f"unknown family {name!r}")


FAMILIES = ("uniform", "conic11", "curve12", "curve22", "ci8_minus_one", "three_on_ruling", "near_ci")


def _search_chunk(args):
    seed, p, family, start, count = args
    F = PrimeField(p)
    out = []
    for trial in range(start, start + count):
        rng = random.Random(f"{seed}:{p}:{family}:{trial}")
        Z = length7_family(family, rng, F)
        verdict, reason = gg_ideal_report(Z, (2, 2))
        out.append({"seed": seed, "trial": trial, "field": F.name, "family": family,
                    "verdict": verdict, "reason": reason})
    return out


def length7_search(trials, seed=0, primes=(10007, 31337), structured=50, jobs=1):
    """Random and structured 7-point sets; any gg_certified verdict is a counterexample.

    ``trials`` uniform configurations and ``structured`` of every other family
    are drawn for each prime.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    tasks = []
    chunk = 500
    for p in primes:
        for fam in FAMILIES:
            n = trials if fam == "uniform" else structured
            for start in range(0, n, chunk):
                tasks.append((seed, p, fam, start, min(chunk, n - start)))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_search_chunk, tasks))
    else:
        parts = [_search_chunk(t) for t in tasks]
    records = sorted((r for part in parts for r in part),
                     key=lambda r: (r["field"], r["family"], r["trial"]))
    summary = {}
    for r in records:
        summary[r["verdict"]] = summary.get(r["verdict"], 0) + 1
    counter = [r for r in records if r["verdict"] == "gg_certified"]
    return {"records": records, "summary": summary, "counterexamples": counter}
