"""Čech models on P1 x P1, used as independent oracles and as the chain-level
engine for cohomology of tensor products.

Two pieces live here.

* A genuine Čech complex for the four-chart cover U_ij = {s_i t_j != 0}.  It
  splits into one small complex per Laurent monomial, and the cohomology of
  that piece depends only on which exponents are negative.  This gives an
  oracle for line-bundle cohomology and for the multiplication action that
  shares no code with the closed forms in ``cox``.

* ``CechComplex``: the total complex of a bounded complex of sums of line
  bundles (maps given by forms) tensored with the product of the two-chart
  Čech complexes of the factors, cut down to a finite exponent window.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .linalg import QQ, Echelon, rank, solve, sparse_kernel

# chart k = 2*i + j inverts s_i and t_j
_CHARTS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def _allowed(neg, subset):
    """Is a monomial with negativity pattern ``neg`` regular on the intersection?"""
    inv_s = {_CHARTS[k][0] for k in subset}
    inv_t = {_CHARTS[k][1] for k in subset}
    inverted = (0 in inv_s, 1 in inv_s, 0 in inv_t, 1 in inv_t)
    return all(inverted[v] or not neg[v] for v in range(4))


@lru_cache(maxsize=None)
def _graded_piece(neg):
    """Cochain bases and coboundary matrices of the Čech complex at one monomial."""
    cells = [[c for c in combinations(range(4), p + 1) if _allowed(neg, c)] for p in range(4)]
    deltas = []
    for p in range(3):
        index = {c: r for r, c in enumerate(cells[p + 1])}
        m = [[0] * len(cells[p]) for _ in cells[p + 1]]
        for col, c in enumerate(cells[p]):
            for k in range(4):
                if k in c:
                    continue
                big = tuple(sorted(c + (k,)))
                if big in index:
                    sign = (-1) ** big.index(k)
                    m[index[big]][col] += sign
        deltas.append(m)
    return cells, deltas


@lru_cache(maxsize=None)
def _piece_cohomology(neg):
    cells, deltas = _graded_piece(neg)
    ranks = [rank(d) if d and d[0] else 0 for d in deltas]
    out = []
    for p in range(3):
        incoming = ranks[p - 1] if p else 0
        out.append(len(cells[p]) - ranks[p] - incoming)
    return tuple(out)


def _neg(e):
    return tuple(x < 0 for x in e)


def line_oracle(i, d, window=None):
    """h^i(O(a,b)) by summing the graded pieces of the four-chart Čech complex."""
    a, b = d
    n = window if window is not None else abs(a) + abs(b) + 4
    total = 0
    for e0 in range(-n, n + 1):
        e1 = a - e0
        if not -n <= e1 <= n:
            continue
        for f0 in range(-n, n + 1):
            f1 = b - f0
            if -n <= f1 <= n:
                total += _piece_cohomology(_neg((e0, e1, f0, f1)))[i]
    return total


def _eps(x, y):
    return (y - x) if x != y else 0


def _reference(neg, i, kind):
    """Reference cocycle at a monomial for the class of ``kind``.

    kind "s" or "t" names the factor carrying the H^1; for H^2 both do.
    """
    cells, _ = _graded_piece(neg)
    vec = []
    for c in cells[i]:
        if i == 0:
            vec.append(1)
        elif i == 1:
            (x, y) = c
            k = 0 if kind == "s" else 1
            vec.append(_eps(_CHARTS[x][k], _CHARTS[y][k]))
        else:
            x, y, z = c
            vec.append(_eps(_CHARTS[x][0], _CHARTS[y][0]) * _eps(_CHARTS[y][1], _CHARTS[z][1]))
    return vec


def _kind(i, d):
    a, b = d
    if i != 1:
        return None
    return "t" if a >= 0 else "s"


def _coefficient(neg, i, kind, cochain):
    """lambda with cochain = lambda * reference + coboundary at this monomial."""
    cells, deltas = _graded_piece(neg)
    bnd = deltas[i - 1] if i else [[] for _ in cells[0]]
    has_class = _piece_cohomology(neg)[i] > 0
    cols = []
    if has_class:
        cols.append(_reference(neg, i, kind))
    ncols_b = len(cells[i - 1]) if i else 0
    for c in range(ncols_b):
        cols.append([bnd[r][c] for r in range(len(cells[i]))])
    mat = [[col[r] for col in cols] for r in range(len(cells[i]))]
    x = solve(mat, cochain, QQ, len(cols))
    if x is None:
        raise ArithmeticError("cochain is not cohomologous to a multiple of the reference")
    return x[0] if has_class else Fraction(0)


def mult_oracle(f, i, d, coords):
    """Image of a class (coordinates on cox.basis) under multiplication by f."""
    from .cox import basis, basis_index

    src = basis(i, tuple(d))
    tgt_d = (d[0] + f.a, d[1] + f.b)
    tgt = basis_index(i, tgt_d)
    kind = _kind(i, d)
    out = [Fraction(0)] * len(tgt)
    for c, m in zip(coords, src):
        if not c:
            continue
        ref = dict(zip(_graded_piece(_neg(m))[0][i], _reference(_neg(m), i, kind)))
        for e, fc in f.terms():
            mu = tuple(x + y for x, y in zip(m, e))
            neg = _neg(mu)
            cells = _graded_piece(neg)[0][i]
            # the product cochain is supported where the source monomial was allowed
            cochain = [ref.get(cell, 0) for cell in cells]
            lam = _coefficient(neg, i, kind, cochain)
            if lam:
                if mu not in tgt:
                    raise ArithmeticError("nonzero class outside the target basis")
                out[tgt[mu]] += c * fc * lam
    return out


class Window:
    """Exponent window [lo, hi] per factor, valid for every listed line bundle."""

    def __init__(self, lo_s, hi_s, lo_t, hi_t):
        self.lo = (lo_s, lo_t)
        self.hi = (hi_s, hi_t)

    @classmethod
    def covering(cls, bidegrees):
        bidegrees = list(bidegrees)
        lo_s = min([0] + [a + 1 for a, _ in bidegrees])
        lo_t = min([0] + [b + 1 for _, b in bidegrees])
        hi_s = max([0] + [a for a, _ in bidegrees])
        hi_t = max([0] + [b for _, b in bidegrees])
        return cls(lo_s, hi_s, lo_t, hi_t)

    def factor_cells(self, k, deg):
        """(chart, e) pairs on factor k for degree deg; e is the exponent of the second variable.

        chart 0 inverts the first variable (needs e >= 0), chart 1 the second
        (needs deg - e >= 0), chart 2 is the overlap.
        """
        lo, hi = self.lo[k], self.hi[k]
        out = []
        for e in range(lo, hi + 1):
            if not lo <= deg - e <= hi:
                continue
            if e >= 0:
                out.append((0, e))
            if deg - e >= 0:
                out.append((1, e))
            out.append((2, e))
        return out


class CechComplex:
    """Windowed Čech total complex of a complex of sums of line bundles.

    ``terms`` maps a position p to a list of bidegrees; ``maps`` maps p to the
    matrix of forms from the term at p to the term at p + 1 (rows index the
    target).  The total degree of a cochain is p plus its Čech degree.
    """

    def __init__(self, terms, maps, window=None, field=QQ):
        self.terms = {p: list(v) for p, v in terms.items()}
        self.maps = dict(maps)
        self.field = field
        alldeg = [d for v in self.terms.values() for d in v]
        self.window = window or Window.covering(alldeg)
        self._basis = {}
        self._index = {}
        for p, summands in self.terms.items():
            for k, (a, b) in enumerate(summands):
                cs = self.window.factor_cells(0, a)
                ct = self.window.factor_cells(1, b)
                for (sc, es) in cs:
                    for (tc, et) in ct:
                        n = p + (sc == 2) + (tc == 2)
                        key = (p, k, sc, tc, es, et)
                        lst = self._basis.setdefault(n, [])
                        self._index[key] = (n, len(lst))
                        lst.append(key)
        self._cohom = {}

    def dim(self, n):
        return len(self._basis.get(n, ()))

    def index(self, key):
        return self._index.get(key)

    def apply_form(self, f, key, sign=1):
        """f * (basis cochain ``key``) as {key: coeff}, window-truncated."""
        p, k, sc, tc, es, et = key
        out = {}
        for (i, j), c in f.coeffs.items():
            nes = es + (f.a - i)
            net = et + (f.b - j)
            out[(nes, net)] = out.get((nes, net), 0) + sign * c
        return out

    def differential_image(self, key):
        """D(key) as a sparse dict over the basis in degree n + 1."""
        p, k, sc, tc, es, et = key
        n, _ = self._index[key]
        out = {}

        def add(tkey, c):
            pos = self._index.get(tkey)
            if pos is None:
                return
            col = pos[1]
            v = out.get(col, 0) + c
            if self.field != QQ:
                v %= self.field.p
            if v:
                out[col] = v
            else:
                out.pop(col, None)

        cs = (sc == 2)
        # Čech part: delta_s (x) 1 + (-1)^{c_s} 1 (x) delta_t
        if sc != 2:
            add((p, k, 2, tc, es, et), -1 if sc == 0 else 1)
        if tc != 2:
            add((p, k, sc, 2, es, et), (-1 if tc == 0 else 1) * (-1) ** cs)
        # sheaf part with sign (-1)^{Čech degree}
        m = self.maps.get(p)
        if m:
            sign = (-1) ** ((sc == 2) + (tc == 2))
            for row, forms in enumerate(m):
                f = forms[k]
                if f is None or f.is_zero():
                    continue
                for (nes, net), c in self.apply_form(f, key, sign).items():
                    add((p + 1, row, sc, tc, nes, net), c)
        return out

    def columns(self, n):
        return [self.differential_image(key) for key in self._basis.get(n, ())]

    def cohomology(self, n):
        if n not in self._cohom:
            self._cohom[n] = _Cohomology(self, n)
        return self._cohom[n]

    def h(self, n):
        return self.cohomology(n).dim


class _Cohomology:
    """Cocycle representatives of H^n and coordinates of arbitrary cocycles."""

    def __init__(self, cx, n):
        field = cx.field
        self.field = field
        ech = Echelon(field)
        for col in cx.columns(n - 1):
            ech.add(col, {})
        self.reps = []
        for z in sparse_kernel(cx.columns(n), field):
            res, _ = ech.add(z, {len(self.reps): field(1)})
            if res:
                self.reps.append(z)
        self.echelon = ech
        self.dim = len(self.reps)

    def coordinates(self, cocycle):
        res, tag = self.echelon.reduce(cocycle, {})
        if res:
            raise ArithmeticError("vector is not a cocycle in this window")
        coords = [self.field(0)] * self.dim
        for k, v in tag.items():
            coords[k] = self.field(-v)
        return coords


def transport(cx_src, cx_tgt, f, vec, n):
    """Multiply a degree-n cochain of ``cx_src`` by the form f into ``cx_tgt``.

    Both complexes present the same sheaf complex up to a twist by deg f and
    share one window.  Monomials leaving the window are dropped.
    """
    keys = cx_src._basis[n]
    out = {}
    for col, c in vec.items():
        p, k, sc, tc, es, et = keys[col]
        for (nes, net), v in cx_src.apply_form(f, keys[col]).items():
            pos = cx_tgt.index((p, k, sc, tc, nes, net))
            if pos is None:
                continue
            nv = out.get(pos[1], 0) + c * v
            if cx_tgt.field != QQ:
                nv %= cx_tgt.field.p
            if nv:
                out[pos[1]] = nv
            else:
                out.pop(pos[1], None)
    return out


def induced_map(cx_src, cx_tgt, f, n):
    """Matrix of H^n(src) -> H^n(tgt) induced by multiplication by f."""
    hs = cx_src.cohomology(n)
    ht = cx_tgt.cohomology(n)
    cols = [ht.coordinates(transport(cx_src, cx_tgt, f, z, n)) for z in hs.reps]
    return [[cols[c][r] for c in range(len(cols))] for r in range(ht.dim)]
