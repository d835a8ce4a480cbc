"""Line bundles O(a,b) on P1 x P1: closed-form cohomology, monomial bases and
the action of bihomogeneous forms.

Classes in H^1 and H^2 live in the local-cohomology model: Laurent monomials
that are negative in the variables of the factor(s) carrying the cohomology.
A form acts by multiplying and then dropping every monomial that falls
outside the target basis.

A monomial is stored as its exponent tuple (e_s0, e_s1, e_t0, e_t1).
"""

from fractions import Fraction
from functools import lru_cache
import random

from .linalg import QQ


class BiForm:
    """Bihomogeneous form of bidegree (a, b) with exact coefficients.

    ``coeffs`` maps (i, j) to the coefficient of s0^i s1^(a-i) t0^j t1^(b-j).
    """

    __slots__ = ("a", "b", "coeffs")

    def __init__(self, a, b, coeffs=None):
        if a < 0 or b < 0:
            raise ValueError(f"form bidegree must be nonnegative, got ({a},{b})")
        self.a, self.b = a, b
        clean = {}
        for (i, j), c in (coeffs or {}).items():
            if not (0 <= i <= a and 0 <= j <= b):
                raise ValueError(f"exponent ({i},{j}) illegal for bidegree ({a},{b})")
            c = Fraction(c)
            if c:
                clean[(i, j)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, a, b):
        return cls(a, b)

    @classmethod
    def one(cls):
        return cls(0, 0, {(0, 0): 1})

    @classmethod
    def monomial(cls, a, b, i, j, c=1):
        return cls(a, b, {(i, j): c})

    @classmethod
    def random(cls, a, b, rng, lo=-9, hi=9):
        return cls(a, b, {(i, j): rng.randint(lo, hi) for i in range(a + 1) for j in range(b + 1)})

    @property
    def bidegree(self):
        return (self.a, self.b)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, BiForm) and self.bidegree == other.bidegree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.a, self.b, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        return f"BiForm({self.a},{self.b},{dict(sorted(self.coeffs.items()))})"

    def __add__(self, other):
        if self.bidegree != other.bidegree:
            raise ValueError("bidegree mismatch")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BiForm(self.a, self.b, out)

    def __neg__(self):
        return BiForm(self.a, self.b, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return BiForm(self.a, self.b, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, BiForm):
            return self.scale(other)
        out = {}
        for (i, j), u in self.coeffs.items():
            for (k, l), v in other.coeffs.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + u * v
        return BiForm(self.a + other.a, self.b + other.b, out)

    def terms(self):
        """Yield (exponent tuple, coefficient)."""
        for (i, j), c in self.coeffs.items():
            yield (i, self.a - i, j, self.b - j), c

    def evaluate(self, s, t, field=QQ):
        """Value at ([s0:s1],[t0:t1]) over ``field``."""
        s0, s1 = field(s[0]), field(s[1])
        t0, t1 = field(t[0]), field(t[1])
        total = field(0)
        for (i, j), c in self.coeffs.items():
            total += field(c) * s0 ** i * s1 ** (self.a - i) * t0 ** j * t1 ** (self.b - j)
        return field(total)

    def partials(self):
        """d/ds0, d/ds1, d/dt0, d/dt1 (zero forms where the degree would go negative)."""
        a, b = self.a, self.b
        ds0, ds1, dt0, dt1 = {}, {}, {}, {}
        for (i, j), c in self.coeffs.items():
            if i:
                ds0[(i - 1, j)] = ds0.get((i - 1, j), 0) + i * c
            if a - i:
                ds1[(i, j)] = ds1.get((i, j), 0) + (a - i) * c
            if j:
                dt0[(i, j - 1)] = dt0.get((i, j - 1), 0) + j * c
            if b - j:
                dt1[(i, j)] = dt1.get((i, j), 0) + (b - j) * c
        sa, sb = max(a - 1, 0), max(b - 1, 0)
        return (BiForm(sa, b, ds0 if a else {}), BiForm(sa, b, ds1 if a else {}),
                BiForm(a, sb, dt0 if b else {}), BiForm(a, sb, dt1 if b else {}))

    def to_json(self):
        return {"a": self.a, "b": self.b,
                "coeffs": [[i, j, str(c)] for (i, j), c in sorted(self.coeffs.items())]}

    @classmethod
    def from_json(cls, obj):
        try:
            a, b = int(obj["a"]), int(obj["b"])
            coeffs = {}
            for i, j, c in obj["coeffs"]:
                coeffs[(int(i), int(j))] = coeffs.get((int(i), int(j)), 0) + Fraction(str(c))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed BiForm JSON: {exc}") from exc
        return cls(a, b, coeffs)


def _check_degree(i):
    if i not in (0, 1, 2):
        raise ValueError(f"cohomological degree must be 0, 1 or 2, got {i}")


def h_line(i, d):
    _check_degree(i)
    a, b = d
    if i == 0:
        return (a + 1) * (b + 1) if a >= 0 and b >= 0 else 0
    if i == 2:
        return (a + 1) * (b + 1) if a <= -2 and b <= -2 else 0
    if a >= 0 and b <= -2:
        return (a + 1) * (-b - 1)
    if a <= -2 and b >= 0:
        return (-a - 1) * (b + 1)
    return 0


def chi_line(d):
    return (d[0] + 1) * (d[1] + 1)


def _factor_exponents(i, a):
    """Exponent pairs (e0, e1) on one P1 factor, e0 descending.

    Kind 0 is the polynomial part, kind 1 the negative Laurent part.
    """
    if i == 0:
        return [(p, a - p) for p in range(a, -1, -1)] if a >= 0 else []
    return [(-q, a + q) for q in range(1, -a)] if a <= -2 else []


@lru_cache(maxsize=None)
def basis(i, d):
    """Ordered basis of H^i(O(a,b)) as exponent tuples."""
    _check_degree(i)
    a, b = d
    if i == 0:
        ks, kt = 0, 0
    elif i == 2:
        ks, kt = 1, 1
    elif a >= 0 and b <= -2:
        ks, kt = 0, 1
    elif a <= -2 and b >= 0:
        ks, kt = 1, 0
    else:
        return ()
    return tuple(s + t for s in _factor_exponents(ks, a) for t in _factor_exponents(kt, b))


@lru_cache(maxsize=None)
def basis_index(i, d):
    return {m: k for k, m in enumerate(basis(i, tuple(d)))}


def mult_matrix(f, i, d):
    """Matrix of H^i(O(d)) -> H^i(O(d + deg f)) given by multiplication by f."""
    d = tuple(d)
    src = basis(i, d)
    tgt_d = (d[0] + f.a, d[1] + f.b)
    tgt = basis_index(i, tgt_d)
    m = [[0] * len(src) for _ in range(len(tgt))]
    if not src or not tgt:
        return m
    terms = list(f.terms())
    for col, mono in enumerate(src):
        for e, c in terms:
            row = tgt.get((mono[0] + e[0], mono[1] + e[1], mono[2] + e[2], mono[3] + e[3]))
            if row is not None:
                m[row][col] += c
    return m


class CohClass:
    """A class in H^degree(O(bundle)) given by coordinates on ``basis``."""

    __slots__ = ("degree", "bundle", "coords")

    def __init__(self, degree, bundle, coords):
        bundle = tuple(bundle)
        if len(coords) != h_line(degree, bundle):
            raise ValueError("coordinate length must equal the cohomology dimension")
        self.degree, self.bundle = degree, bundle
        self.coords = tuple(Fraction(c) for c in coords)

    def __eq__(self, other):
        return (isinstance(other, CohClass) and self.degree == other.degree
                and self.bundle == other.bundle and self.coords == other.coords)

    def __repr__(self):
        return f"CohClass(H^{self.degree} O{self.bundle}, {list(self.coords)})"

    @classmethod
    def basis_vector(cls, degree, bundle, k):
        n = h_line(degree, tuple(bundle))
        if not 0 <= k < n:
            raise IndexError(f"H^{degree} O{tuple(bundle)} has dimension {n}")
        return cls(degree, bundle, [1 if j == k else 0 for j in range(n)])


def mult(f, c):
    m = mult_matrix(f, c.degree, c.bundle)
    coords = [sum((x * y for x, y in zip(row, c.coords)), Fraction(0)) for row in m]
    return CohClass(c.degree, (c.bundle[0] + f.a, c.bundle[1] + f.b), coords)


def serre_dual_check(i, d):
    a, b = d
    return h_line(i, (a, b)) == h_line(2 - i, (-2 - a, -2 - b))


def format_monomial(e):
    names = ("s0", "s1", "t0", "t1")
    parts = []
    for n, k in zip(names, e):
        if k == 1:
            parts.append(n)
        elif k:
            parts.append(f"{n}^{k}")
    return "*".join(parts) or "1"


def default_rng(seed):
    return random.Random(seed)
