"""Sheaves on P1 x P1 presented as cokernels 0 -> A -> B -> E -> 0 of matrices
of forms between sums of line bundles.

Cohomology of E(s,t) comes from the long exact sequence: the maps
H^k(A(s,t)) -> H^k(B(s,t)) are assembled block by block from the Laurent
multiplication matrices in ``cox``.  For two-term complexes the sequence
determines every h^k from the ranks alone.

Cohomology of F^dual (x) G needs more than ranks of single maps, so it runs
at chain level through the windowed Čech model in ``cech``.
"""

from fractions import Fraction
import random
import warnings

from .cox import BiForm, basis, h_line, mult_matrix
from .cech import CechComplex, Window, induced_map
from .linalg import QQ, rank, rref, kernel_basis


def _add(d, e):
    return (d[0] + e[0], d[1] + e[1])


def _sub(d, e):
    return (d[0] - e[0], d[1] - e[1])


def _neg(d):
    return (-d[0], -d[1])


class Presentation:
    """E = coker(matrix: sum O(source) -> sum O(target)).

    ``matrix[i][j]`` is the form from source j to target i, or None when the
    bidegree target_i - source_j has a negative component.
    """

    def __init__(self, source, target, matrix, locally_free=False, seed=None):
        self.source = [tuple(d) for d in source]
        self.target = [tuple(d) for d in target]
        self.matrix = [list(row) for row in matrix]
        self.locally_free = bool(locally_free)
        self.seed = seed
        self._check_shape()
        self._cache = {}

    def _check_shape(self):
        if len(self.matrix) != len(self.target):
            raise ValueError("matrix needs one row per target summand")
        for i, row in enumerate(self.matrix):
            if len(row) != len(self.source):
                raise ValueError("matrix needs one column per source summand")
            for j, f in enumerate(row):
                need = _sub(self.target[i], self.source[j])
                if need[0] < 0 or need[1] < 0:
                    if f is not None and not f.is_zero():
                        raise ValueError(f"entry ({i},{j}) must vanish, bidegree {need}")
                    row[j] = None
                else:
                    if f is None:
                        row[j] = BiForm.zero(*need)
                    elif f.bidegree != need:
                        raise ValueError(f"entry ({i},{j}) has bidegree {f.bidegree}, expected {need}")

    # construction helpers

    @classmethod
    def generic(cls, source, target, seed=0, locally_free=False, rng=None):
        rng = rng or random.Random(seed)
        source = [tuple(d) for d in source]
        target = [tuple(d) for d in target]
        matrix = []
        for bi in target:
            row = []
            for aj in source:
                d = _sub(bi, aj)
                row.append(BiForm.random(d[0], d[1], rng) if d[0] >= 0 and d[1] >= 0 else None)
            matrix.append(row)
        return cls(source, target, matrix, locally_free, seed)

    @classmethod
    def line_bundle(cls, d):
        return cls([], [tuple(d)], [[]], locally_free=True)

    @classmethod
    def direct_sum(cls, *parts):
        source = [d for p in parts for d in p.source]
        target = [d for p in parts for d in p.target]
        matrix = []
        col0 = 0
        for p in parts:
            for row in p.matrix:
                full = [None] * len(source)
                full[col0:col0 + len(p.source)] = row
                matrix.append(full)
            col0 += len(p.source)
        return cls(source, target, matrix, all(p.locally_free for p in parts))

    def twist(self, s, t):
        return Presentation([_add(d, (s, t)) for d in self.source],
                            [_add(d, (s, t)) for d in self.target],
                            self.matrix, self.locally_free, self.seed)

    @property
    def rank(self):
        return len(self.target) - len(self.source)

    def entry(self, i, j):
        return self.matrix[i][j]

    def evaluate(self, s, t, field=QQ):
        return [[field(0) if f is None else f.evaluate(s, t, field) for f in row] for row in self.matrix]

    def __repr__(self):
        return f"Presentation(source={self.source}, target={self.target})"

    # serialization

    def to_json(self):
        return {
            "source": [list(d) for d in self.source],
            "target": [list(d) for d in self.target],
            "matrix": [[None if f is None else f.to_json() for f in row] for row in self.matrix],
            "locally_free": self.locally_free,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, obj):
        try:
            source = [tuple(int(x) for x in d) for d in obj["source"]]
            target = [tuple(int(x) for x in d) for d in obj["target"]]
            matrix = [[None if f is None else BiForm.from_json(f) for f in row] for row in obj["matrix"]]
            lf = bool(obj.get("locally_free", False))
            seed = obj.get("seed")
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed presentation JSON: {exc}") from exc
        return cls(source, target, matrix, lf, seed)


# Chern classes.  A Chow element is (c0, (x, y), z) with (x,y) a divisor class
# and z a multiple of the point class.

def _dot(u, v):
    return u[0] * v[1] + u[1] * v[0]


def chow_mul(p, q):
    return (p[0] * q[0],
            (p[0] * q[1][0] + q[0] * p[1][0], p[0] * q[1][1] + q[0] * p[1][1]),
            p[0] * q[2] + q[0] * p[2] + _dot(p[1], q[1]))


def chow_inv(p):
    if p[0] != 1:
        raise ValueError("only total Chern classes (leading term 1) are invertible here")
    a1, a2 = p[1], p[2]
    return (1, _neg(a1), _dot(a1, a1) - a2)


def total_chern(summands):
    c = (1, (0, 0), 0)
    for d in summands:
        c = chow_mul(c, (1, tuple(d), 0))
    return c


class ChernData(tuple):
    """(r, c1, c2) with c1 a bidegree."""

    def __new__(cls, r, c1, c2):
        return super().__new__(cls, (r, tuple(c1), c2))

    r = property(lambda self: self[0])
    c1 = property(lambda self: self[1])
    c2 = property(lambda self: self[2])

    def to_json(self):
        return {"r": self.r, "c1": list(self.c1), "c2": self.c2}


def chern(P):
    if isinstance(P, DualPresentation):
        c = chern(P.base)
        return ChernData(c.r, _neg(c.c1), c.c2)
    r = P.rank
    if r <= 0:
        raise ValueError(f"rank must be positive, got {r}")
    c = chow_mul(total_chern(P.target), chow_inv(total_chern(P.source)))
    return ChernData(r, c[1], c[2])


def twist_chern(c, s, t):
    r, (a, b), c2 = c
    return ChernData(r, (a + r * s, b + r * t), c2 + (r - 1) * (a * t + b * s) + 2 * s * t * r * (r - 1) // 2)


def euler_char(c):
    r, (a, b), c2 = c
    return (a + 1) * (b + 1) + r - c2 - 1


# Cohomology through the long exact sequence

def _block(rows_deg, cols_deg, entry, k):
    """Assemble the block matrix of H^k maps; entry(i, j) gives the form or None."""
    row_dims = [h_line(k, d) for d in rows_deg]
    col_dims = [h_line(k, d) for d in cols_deg]
    m = [[0] * sum(col_dims) for _ in range(sum(row_dims))]
    r0 = 0
    for i, rd in enumerate(row_dims):
        c0 = 0
        for j, cd in enumerate(col_dims):
            f = entry(i, j)
            if rd and cd and f is not None and not f.is_zero():
                blk = mult_matrix(f, k, cols_deg[j])
                for x in range(rd):
                    m[r0 + x][c0:c0 + cd] = blk[x]
            c0 += cd
        r0 += rd
    return m, sum(row_dims), sum(col_dims)


class SheafHandle:
    """Presentation plus a cache of twisted cohomology and LES data."""

    def __init__(self, P, field=QQ):
        if isinstance(P, SheafHandle):
            P = P.presentation
        self.presentation = P
        self.field = field
        self._maps = {}
        self._table = {}

    @property
    def is_dual(self):
        return isinstance(self.presentation, DualPresentation)

    def les_map(self, k, s, t):
        """(matrix, rank, rows, cols) of the k-th map in the long exact sequence."""
        key = (k, s, t)
        if key not in self._maps:
            if not 0 <= k <= 2:
                self._maps[key] = ([], 0, 0, 0)
            else:
                P = self.presentation
                if self.is_dual:
                    base = P.base
                    src = [_add(_neg(d), (s, t)) for d in base.target]
                    tgt = [_add(_neg(d), (s, t)) for d in base.source]
                    m, nr, nc = _block(tgt, src, lambda j, i: base.matrix[i][j], k)
                else:
                    src = [_add(d, (s, t)) for d in P.source]
                    tgt = [_add(d, (s, t)) for d in P.target]
                    m, nr, nc = _block(tgt, src, lambda i, j: P.matrix[i][j], k)
                rk = rank(m, self.field) if nr and nc else 0
                self._maps[key] = (m, rk, nr, nc)
        return self._maps[key]

    def cohomology(self, s=0, t=0):
        key = (s, t)
        if key not in self._table:
            out = []
            for k in range(3):
                if self.is_dual:
                    # 0 -> E^dual -> B^dual -> A^dual -> 0
                    _, rk, _, nc = self.les_map(k, s, t)
                    _, rk_prev, nr_prev, _ = self.les_map(k - 1, s, t)
                    out.append((nc - rk) + (nr_prev - rk_prev))
                else:
                    _, rk, nr, _ = self.les_map(k, s, t)
                    _, rk_next, _, nc_next = self.les_map(k + 1, s, t)
                    out.append((nr - rk) + (nc_next - rk_next))
            self._table[key] = tuple(out)
        return self._table[key]

    def h(self, i, s=0, t=0):
        return self.cohomology(s, t)[i]

    def representatives(self, k, s=0, t=0):
        """Basis of H^k as (image part, kernel part) coordinate vectors.

        Coker side: vectors in H^k(B(s,t)) spanning a complement of the image,
        then kernel vectors of H^(k+1)(A) -> H^(k+1)(B).  Dual side: kernel
        vectors of H^k(B^dual) -> H^k(A^dual), then complement vectors in
        H^(k-1)(A^dual).
        """
        if self.is_dual:
            m, _, _, nc = self.les_map(k, s, t)
            kern = kernel_basis(m, self.field, nc) if nc else []
            mp, _, nr_prev, _ = self.les_map(k - 1, s, t)
            comp = _complement(mp, nr_prev, self.field)
            return kern, comp
        m, _, nr, _ = self.les_map(k, s, t)
        comp = _complement(m, nr, self.field)
        mn, _, _, nc_next = self.les_map(k + 1, s, t)
        kern = kernel_basis(mn, self.field, nc_next) if nc_next else []
        return comp, kern


def _complement(m, nrows, field):
    """Standard basis vectors completing the column space of m."""
    if not nrows:
        return []
    if m and m[0]:
        cols = [list(c) for c in zip(*m)]
        _, piv = rref(cols, field, nrows)
    else:
        piv = []
    used = set(piv)
    return [[field(1) if x == c else field(0) for x in range(nrows)] for c in range(nrows) if c not in used]


def handle(x, field=QQ):
    if isinstance(x, SheafHandle):
        return x
    if field == QQ:
        h = x._cache.get("handle")
        if h is None:
            h = x._cache["handle"] = SheafHandle(x)
        return h
    return SheafHandle(x, field)


def cohomology(x, s=0, t=0):
    return handle(x).cohomology(s, t)


class DualPresentation:
    """E^dual = ker(B^dual -> A^dual) for a locally free E = coker(A -> B)."""

    def __init__(self, base):
        self.base = base
        self.locally_free = True
        self._cache = {}

    @property
    def rank(self):
        return self.base.rank

    def twist(self, s, t):
        return DualPresentation(self.base.twist(-s, -t))


def dual(P, locally_free=None):
    """Dual of a locally free cokernel.  Dualizing a dual returns the original."""
    if isinstance(P, DualPresentation):
        return P.base
    lf = P.locally_free if locally_free is None else locally_free
    if not lf:
        raise ValueError("dual requires the cokernel to be asserted locally free")
    return DualPresentation(P)


# Pointwise checks

def random_points(rng, n, field=QQ, bound=20):
    """Points of P1 x P1 spread over all four standard charts, including the coordinate points."""
    pts = []
    for k in range(n):
        pair = []
        for _ in range(2):
            mode = rng.randrange(4)
            x = rng.randint(-bound, bound)
            if mode == 0:
                pair.append((1, x))
            elif mode == 1:
                pair.append((x, 1))
            elif mode == 2:
                pair.append((1, 0) if rng.random() < 0.5 else (0, 1))
            else:
                pair.append((rng.randint(1, bound), rng.randint(-bound, bound)))
        pts.append(tuple(pair))
    return pts


def generically_injective(P, seed=0, tries=3):
    """Rank at a random rational point equals the number of source summands."""
    if not P.source:
        return True
    rng = random.Random(seed)
    for _ in range(tries):
        s = (rng.randint(1, 97), rng.randint(-97, 97))
        t = (rng.randint(1, 97), rng.randint(-97, 97))
        if rank(P.evaluate(s, t)) == len(P.source):
            return True
    return False


def locally_free_spot_check(P, seed=0, points=50):
    """False refutes local freeness: the fiber map drops rank at some sampled point."""
    if not P.source:
        return True
    rng = random.Random(seed)
    for s, t in random_points(rng, points):
        if rank(P.evaluate(s, t)) != len(P.source):
            return False
    return True


# Extensions

def extension_by_trivial(P, k, classes):
    """Horseshoe presentation of 0 -> O^k -> E' -> E -> 0 for classes in H^1(E^dual).

    A class is a coordinate vector on ``SheafHandle(dual(P)).representatives(1)``:
    first the part coming from H^0(A^dual), then the part from H^1(B^dual).  Only
    the first part can be realized by new rows of forms.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(classes) != k:
        raise ValueError("need exactly k classes")
    hd = SheafHandle(dual(P))
    kern, comp = hd.representatives(1)
    dim = len(kern) + len(comp)
    for c in classes:
        if len(c) != dim:
            raise ValueError(f"class vector length {len(c)} != h^1(E^dual) = {dim}")
    # kern holds the part from H^1(B^dual); comp the part from H^0(A^dual)
    if any(Fraction(x) for c in classes for x in c[len(comp):]):
        raise ValueError("classes with a component from H^1(B^dual) are not realizable as new rows")
    if rank([[Fraction(x) for x in c] for c in classes]) < k:
        warnings.warn("extension classes are linearly dependent; the result has a trivial factor")
    src_deg = [_neg(d) for d in P.source]
    offsets = []
    off = 0
    for d in src_deg:
        offsets.append(off)
        off += h_line(0, d)
    new_rows = []
    for c in classes:
        vec = [Fraction(0)] * off
        for coef, e in zip(c[:len(comp)], comp):
            for x, y in enumerate(e):
                vec[x] += coef * y
        row = []
        for j, d in enumerate(src_deg):
            if h_line(0, d) == 0:
                row.append(None)
                continue
            coeffs = {}
            for x, mono in enumerate(basis(0, d)):
                v = vec[offsets[j] + x]
                if v:
                    coeffs[(mono[0], mono[2])] = v
            row.append(BiForm(d[0], d[1], coeffs))
        new_rows.append(row)
    return Presentation(P.source, P.target + [(0, 0)] * k, P.matrix + new_rows, P.locally_free, P.seed)


def random_classes(P, k, seed=0):
    """k random integer class vectors supported on the realizable part of H^1(E^dual)."""
    hd = SheafHandle(dual(P))
    kern, comp = hd.representatives(1)
    rng = random.Random(seed)
    return [[rng.randint(-9, 9) for _ in comp] + [0] * len(kern) for _ in range(k)]


def extension_of(Pq, Ps, C=None, seed=0):
    """E with 0 -> E_q -> E -> E_s -> 0, presented block lower triangular.

    ``C[i][j]`` is the form from source j of Ps to target i of Pq.  When C is
    None a random one is drawn.
    """
    if C is None:
        rng = random.Random(seed)
        C = []
        for bi in Pq.target:
            row = []
            for aj in Ps.source:
                d = _sub(bi, aj)
                row.append(BiForm.random(d[0], d[1], rng) if min(d) >= 0 else None)
            C.append(row)
    if len(C) != len(Pq.target) or any(len(r) != len(Ps.source) for r in C):
        raise ValueError("class data has the wrong shape")
    source = Ps.source + Pq.source
    target = Ps.target + Pq.target
    matrix = [list(r) + [None] * len(Pq.source) for r in Ps.matrix]
    matrix += [list(C[i]) + list(Pq.matrix[i]) for i in range(len(Pq.target))]
    return Presentation(source, target, matrix, Ps.locally_free and Pq.locally_free, seed)


# Global generation and splitting certificates

def gg_castelnuovo_mumford(x):
    h = handle(x)
    return h.h(1, -1, -1) == 0 and h.h(2, -2, -2) == 0


def gg_bm(x):
    h = handle(x)
    return h.h(1, -1, 0) == 0 and h.h(1, 0, -1) == 0 and h.h(2, -1, -1) == 0


def trivial_factor_test(x, gg_certified=False):
    """For a globally generated bundle: is O a direct summand?  Same as h^0(E^dual) > 0."""
    if not gg_certified:
        raise ValueError("trivial_factor_test needs certified global generation")
    P = x.presentation if isinstance(x, SheafHandle) else x
    return handle(dual(P, True)).h(0) > 0


def is_maximal_type_shape(P):
    return (len(P.source) == 1 and min(P.source[0]) <= 0 and all(d == (0, 0) for d in P.target)
            and h_line(1, P.source[0]) == 0)


def indecomposable_maximal_type(x):
    P = x.presentation if isinstance(x, SheafHandle) else x
    if not is_maximal_type_shape(P):
        raise ValueError("not of maximal type shape O(-a,-b) -> O^(r+1) with h^1(O(-a,-b)) = 0")
    h = handle(P)
    if h.h(0) != P.rank + 1:
        return False
    # a quotient of O^(r+1) is globally generated
    return not trivial_factor_test(h, gg_certified=True)


def index_search(x, bound):
    """Maximal (m, n) in [-bound, bound] with h^0(E(-m,-n)) != 0."""
    A, B = bound
    if A < 0 or B < 0:
        raise ValueError("empty search window")
    h = handle(x)
    hits = [(m, n) for m in range(-A, A + 1) for n in range(-B, B + 1) if h.h(0, -m, -n)]
    return sorted(p for p in hits
                  if not any(q != p and q[0] >= p[0] and q[1] >= p[1] for q in hits))


def stable_normalized(x):
    """Stability of a rank 2 bundle with c1 = (0,0) via the three H^0 vanishings."""
    P = x.presentation if isinstance(x, SheafHandle) else x
    c = chern(P)
    if c.r != 2 or c.c1 != (0, 0):
        raise ValueError("only rank 2 bundles with c1 = (0,0)")
    h = handle(x)
    return h.h(0) == 0 and h.h(0, -1, 1) == 0 and h.h(0, 1, -1) == 0


# Tensor products

def _g_model(Pg, d, window, field):
    return CechComplex({-1: [_add(a, d) for a in Pg.source], 0: [_add(b, d) for b in Pg.target]},
                       {-1: Pg.matrix} if Pg.source else {}, window, field)


def hom_cohomology(Pf, Pg, s=0, t=0, field=QQ):
    """h^i(F^dual (x) G (s,t)) from 0 -> F^dual(x)G -> B_F^dual(x)G -> A_F^dual(x)G -> 0.

    Each term is a sum of twists of G.  Their cohomology carries cocycle
    representatives in a Čech model of G's presentation, and the maps
    between them are induced by the entries of F's matrix.
    """
    if not Pf.locally_free:
        raise ValueError("hom_cohomology requires coker(Pf) asserted locally free")
    st = (s, t)
    dB = [_add(_neg(b), st) for b in Pf.target]
    dA = [_add(_neg(a), st) for a in Pf.source]
    degs = [_add(x, d) for d in dB + dA for x in Pg.source + Pg.target]
    window = Window.covering(degs)
    models = {}

    def model(d):
        if d not in models:
            models[d] = _g_model(Pg, d, window, field)
        return models[d]

    maps = []
    for k in range(3):
        src = [model(d).h(k) for d in dB]
        tgt = [model(d).h(k) for d in dA]
        m = [[0] * sum(src) for _ in range(sum(tgt))]
        r0 = 0
        for j, dj in enumerate(dA):
            c0 = 0
            for i, di in enumerate(dB):
                f = Pf.matrix[i][j]
                if f is not None and not f.is_zero() and src[i] and tgt[j]:
                    blk = induced_map(model(di), model(dj), f, k)
                    for x in range(tgt[j]):
                        m[r0 + x][c0:c0 + src[i]] = blk[x]
                c0 += src[i]
            r0 += tgt[j]
        rk = rank(m, field) if m and m[0] else 0
        maps.append((sum(src), sum(tgt), rk))
    out = []
    for k in range(3):
        ns, _, rk = maps[k]
        coker_prev = (maps[k - 1][1] - maps[k - 1][2]) if k else 0
        out.append(ns - rk + coker_prev)
    return tuple(out)


def tensor_hypercohomology(Pf, Pg, s=0, t=0, field=QQ):
    """Same dimensions as ``hom_cohomology``, from the total complex of the tensor product of resolutions."""
    st = (s, t)
    BF, AF, BG, AG = Pf.target, Pf.source, Pg.target, Pg.source
    lo = [(i, l) for i in range(len(BF)) for l in range(len(AG))]
    mid_bb = [(i, l) for i in range(len(BF)) for l in range(len(BG))]
    mid_aa = [(j, l) for j in range(len(AF)) for l in range(len(AG))]
    hi = [(j, l) for j in range(len(AF)) for l in range(len(BG))]
    terms = {
        -1: [_add(_add(_neg(BF[i]), AG[l]), st) for i, l in lo],
        0: [_add(_add(_neg(BF[i]), BG[l]), st) for i, l in mid_bb]
           + [_add(_add(_neg(AF[j]), AG[l]), st) for j, l in mid_aa],
        1: [_add(_add(_neg(AF[j]), BG[l]), st) for j, l in hi],
    }
    M, N = Pf.matrix, Pg.matrix
    d_lo = [[None] * len(lo) for _ in range(len(mid_bb) + len(mid_aa))]
    for c, (i, l) in enumerate(lo):
        for r, (i2, m) in enumerate(mid_bb):
            if i2 == i and N[m][l] is not None:
                d_lo[r][c] = N[m][l]
        for r, (j, l2) in enumerate(mid_aa):
            if l2 == l and M[i][j] is not None:
                d_lo[len(mid_bb) + r][c] = M[i][j]
    d_mid = [[None] * (len(mid_bb) + len(mid_aa)) for _ in hi]
    for r, (j, m) in enumerate(hi):
        for c, (i, m2) in enumerate(mid_bb):
            if m2 == m and M[i][j] is not None:
                d_mid[r][c] = M[i][j]
        for c, (j2, l) in enumerate(mid_aa):
            if j2 == j and N[m][l] is not None:
                d_mid[r][len(mid_bb) + c] = -N[m][l]
    maps = {}
    if lo and terms[0]:
        maps[-1] = d_lo
    if hi and terms[0]:
        maps[0] = d_mid
    cx = CechComplex(terms, maps, None, field)
    return tuple(cx.h(n) for n in range(3))


def split_target_summand(P, i, field=QQ):
    """Forms g_k with row_i + sum g_k row_k = 0, or None.

    Such forms exist exactly when row operations clear row i, and then
    O(target_i) is a direct summand of the cokernel.
    """
    bi = P.target[i]
    unknowns = []
    for k, bk in enumerate(P.target):
        d = _sub(bi, bk)
        if k == i or min(d) < 0:
            continue
        for mono in basis(0, d):
            unknowns.append((k, d, mono))
    eqs = {}
    rhs = {}
    for j, aj in enumerate(P.source):
        f = P.matrix[i][j]
        if f is None:
            continue
        for e, c in f.terms():
            rhs[(j, e)] = rhs.get((j, e), 0) - c
        for u, (k, d, mono) in enumerate(unknowns):
            g = P.matrix[k][j]
            if g is None:
                continue
            for e, c in g.terms():
                key = (j, tuple(x + y for x, y in zip(e, mono)))
                eqs.setdefault(key, {})
                eqs[key][u] = eqs[key].get(u, 0) + c
    keys = sorted(set(eqs) | set(rhs))
    if not unknowns:
        return [] if not any(rhs.values()) else None
    m = [[eqs.get(key, {}).get(u, 0) for u in range(len(unknowns))] for key in keys]
    from .linalg import solve
    x = solve(m, [rhs.get(key, 0) for key in keys], field, len(unknowns))
    if x is None:
        return None
    out = {}
    for (k, d, mono), v in zip(unknowns, x):
        if v:
            out.setdefault(k, {})[(mono[0], mono[2])] = v
    return {k: BiForm(*_sub(bi, P.target[k]), c) for k, c in out.items()}


# Endomorphism algebra

def _form_keys(d):
    return [(m[0], m[2]) for m in basis(0, d)] if min(d) >= 0 else []


class EndAlgebra:
    """End(E) for E = coker(M: A -> B) as a finite-dimensional algebra over Q.

    An endomorphism lifts to phi: B -> B with phi M = M psi; lifts differ by
    M h with h: B -> A.  This needs Ext^1(B, A) = 0, i.e. h^1 of every
    O(a_j - b_i) vanishes.
    """

    def __init__(self, P):
        for a in P.source:
            for b in P.target:
                if h_line(1, _sub(a, b)):
                    raise ValueError("Ext^1(B, A) != 0; endomorphisms need not lift")
        self.P = P
        nb, na = len(P.target), len(P.source)
        self.phi_slots = [(i, k, _sub(P.target[i], P.target[k])) for i in range(nb) for k in range(nb)]
        self.phi_slots = [s for s in self.phi_slots if min(s[2]) >= 0]
        psi_slots = [(i, k, _sub(P.source[i], P.source[k])) for i in range(na) for k in range(na)]
        psi_slots = [s for s in psi_slots if min(s[2]) >= 0]
        self.phi_vars = [(s, key) for s in self.phi_slots for key in _form_keys(s[2])]
        psi_vars = [(s, key) for s in psi_slots for key in _form_keys(s[2])]
        nphi = len(self.phi_vars)
        # equations: (phi M - M psi)_{ij} = 0 coefficientwise
        eqs = {}

        def add(row_key, var, c):
            eq = eqs.setdefault(row_key, {})
            eq[var] = eq.get(var, 0) + c

        for v, ((i, k, d), key) in enumerate(self.phi_vars):
            for j in range(na):
                f = P.matrix[k][j]
                if f is None:
                    continue
                for (x, y), c in f.coeffs.items():
                    add((i, j, x + key[0], y + key[1]), v, c)
        for v, ((k, j, d), key) in enumerate(psi_vars):
            for i in range(nb):
                f = P.matrix[i][k]
                if f is None:
                    continue
                for (x, y), c in f.coeffs.items():
                    add((i, j, x + key[0], y + key[1]), nphi + v, -c)
        nv = nphi + len(psi_vars)
        rows = [[eq.get(v, 0) for v in range(nv)] for eq in eqs.values()]
        ker = kernel_basis(rows, QQ, nv) if rows else [[1 if i == j else 0 for i in range(nv)] for j in range(nv)]
        lifts = [v[:nphi] for v in ker]
        # homotopies M h
        self._phi_index = {var: n for n, var in enumerate(self.phi_vars)}
        homot = []
        for j in range(na):
            for k in range(nb):
                d = _sub(P.source[j], P.target[k])
                for key in _form_keys(d):
                    h = {(j, k): BiForm(d[0], d[1], {key: 1})}
                    homot.append(self._vec({(i, k): P.matrix[i][j] * h[(j, k)]
                                            for i in range(nb) if P.matrix[i][j] is not None}))
        rr, piv = rref(homot, QQ, nphi) if homot else ([], [])
        self._homot = (rr, piv)
        basis_vecs = []
        for v in lifts:
            red = self._reduce(v)
            if any(red):
                basis_vecs.append(red)
        rb, pb = rref(basis_vecs, QQ, nphi) if basis_vecs else ([], [])
        self.basis = rb
        self._pivots = pb
        self.dim = len(rb)

    def _vec(self, entries):
        v = [Fraction(0)] * len(self.phi_vars)
        for (i, k), f in entries.items():
            for key, c in f.coeffs.items():
                v[self._phi_index[((i, k, _sub(self.P.target[i], self.P.target[k])), key)]] += c
        return v

    def _reduce(self, v):
        v = list(v)
        rows, piv = self._homot
        for row, pc in zip(rows, piv):
            if v[pc]:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def _matrix(self, v):
        out = {}
        for c, ((i, k, d), key) in zip(v, self.phi_vars):
            if c:
                out.setdefault((i, k), {})[key] = c
        return {ik: BiForm(*_sub(self.P.target[ik[0]], self.P.target[ik[1]]), cs) for ik, cs in out.items()}

    def coords(self, v):
        v = self._reduce(v)
        out = []
        for row, pc in zip(self.basis, self._pivots):
            f = v[pc]
            out.append(f)
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        if any(v):
            raise ArithmeticError("vector outside the endomorphism space")
        return out

    def product(self, u, v):
        """Coordinates of basis[u] o basis[v]."""
        a, b = self._matrix(self.basis[u]), self._matrix(self.basis[v])
        prod = {}
        for (i, k), f in a.items():
            for (k2, j), g in b.items():
                if k == k2:
                    prod[(i, j)] = prod[(i, j)] + f * g if (i, j) in prod else f * g
        return self.coords(self._vec(prod))

    def radical_codim(self):
        """dim End - dim rad End, with the radical from the trace form (char 0)."""
        n = self.dim
        table = [[self.product(u, v) for v in range(n)] for u in range(n)]
        # left multiplication L_u has column v equal to table[u][v]
        L = [[[table[u][v][w] for v in range(n)] for w in range(n)] for u in range(n)]

        def trace_of_product(x, y):
            return sum((x[i][k] * y[k][i] for i in range(n) for k in range(n)), Fraction(0))

        form = [[trace_of_product(L[u], L[v]) for v in range(n)] for u in range(n)]
        return rank(form)


def is_indecomposable(P):
    """Exact: E is indecomposable (over the algebraic closure) iff End(E) is local."""
    alg = EndAlgebra(P)
    return alg.dim >= 1 and alg.radical_codim() == 1


def _det(rows):
    """Determinant of a square matrix of forms (None = 0); None if it vanishes identically."""
    n = len(rows)
    if n == 1:
        return rows[0][0] if rows[0][0] is not None and not rows[0][0].is_zero() else None
    total = None
    for j in range(n):
        f = rows[0][j]
        if f is None or f.is_zero():
            continue
        sub = _det([r[:j] + r[j + 1:] for r in rows[1:]])
        if sub is None:
            continue
        term = f * sub if j % 2 == 0 else -(f * sub)
        total = term if total is None else total + term
    return None if total is None or total.is_zero() else total


def locally_free_certificate(P, kmax=4):
    """Exact check that the maximal minors of the matrix have no common zero.

    True when, in some bidegree D, the minors times monomials span H^0(O(D));
    then the cokernel is locally free of the expected rank.  None means the
    test was inconclusive up to ``kmax``.
    """
    from itertools import combinations
    n = len(P.source)
    if n == 0:
        return True
    minors = []
    for rows in combinations(range(len(P.target)), n):
        m = _det([P.matrix[i] for i in rows])
        if m is not None:
            minors.append(m)
    if not minors:
        return None
    top = (max(m.a for m in minors), max(m.b for m in minors))
    for k in range(kmax + 1):
        D = (top[0] + k, top[1] + k)
        keys = {key: c for c, key in enumerate(_form_keys(D))}
        vecs = []
        for m in minors:
            e = _sub(D, m.bidegree)
            for key in _form_keys(e):
                prod = m * BiForm(e[0], e[1], {key: 1})
                v = [0] * len(keys)
                for kk, c in prod.coeffs.items():
                    v[keys[kk]] = c
                vecs.append(v)
        if rank(vecs) == len(keys):
            return True
    return None
