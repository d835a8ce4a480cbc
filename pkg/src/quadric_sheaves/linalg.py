"""Exact linear algebra over the rationals and over prime fields.

Matrices are plain lists of rows.  Rational entries are ``Fraction`` (ints are
accepted), prime-field entries are ints reduced mod p.  Dense rank over Q uses
fraction-free (Bareiss) elimination; the sparse ``Echelon`` class is the
workhorse for the larger Cech complexes.
"""

from fractions import Fraction
from math import lcm

PRIMES = (10007, 31337, 65537)


class RationalField:
    name = "Q"
    char = 0

    def __call__(self, x):
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, x):
        return 1 / Fraction(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    def __init__(self, p):
        if p < 3:
            raise ValueError("need an odd prime")
        self.p = p
        self.char = p
        self.name = f"Fp:{p}"

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        return pow(int(x), -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()


def field_from_name(name):
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field {name!r}")


def transpose(m, ncols=None):
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matvec(m, v, field=QQ):
    out = [sum((a * b for a, b in zip(row, v)), field(0)) for row in m]
    if field is not QQ:
        out = [x % field.p for x in out]
    return out


def matmul(a, b, field=QQ):
    bt = transpose(b)
    return [matvec(bt, row, field) for row in a]


def _integer_rows(m):
    rows = []
    for row in m:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        rows.append([int(x * den) for x in row])
    return rows


def bareiss_rank(m):
    """Rank over Q by fraction-free elimination (first nonzero pivot, column order)."""
    a = _integer_rows(m)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f:
                for k in range(c + 1, ncols):
                    row[k] = (p * row[k] - f * prow[k]) // prev
            else:
                for k in range(c + 1, ncols):
                    row[k] = (p * row[k]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def _rank_mod_p(m, p):
    a = [[int(x) % p for x in row] for row in m]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        prow = [x * inv % p for x in a[r]]
        a[r] = prow
        for i in range(r + 1, nrows):
            f = a[i][c]
            if f:
                row = a[i]
                for k in range(c, ncols):
                    row[k] = (row[k] - f * prow[k]) % p
        r += 1
        if r == nrows:
            break
    return r


def rank(m, field=QQ):
    if field == QQ:
        return bareiss_rank(m)
    return _rank_mod_p([[field(x) for x in row] for row in m], field.p)


def rref(m, field=QQ, ncols=None):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    a = [[field(x) for x in row] for row in m]
    ncols = len(a[0]) if a else (ncols or 0)
    nrows = len(a)
    pivots = []
    r = 0
    modp = field != QQ
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field(x * inv) for x in a[r]] if modp else [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                if modp:
                    a[i] = [(x - f * y) % field.p for x, y in zip(a[i], a[r])]
                else:
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def kernel_basis(m, field=QQ, ncols=None):
    """Basis of {x : m x = 0}; one vector per free column."""
    if m:
        ncols = len(m[0])
    elif ncols is None:
        raise ValueError("ncols required for an empty matrix")
    rows, pivots = rref(m, field, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field(0)] * ncols
        v[f] = field(1)
        for row, pc in zip(rows, pivots):
            v[pc] = field(-row[f])
        basis.append(v)
    return basis


def solve(m, b, field=QQ, ncols=None):
    """Some x with m x = b, or None when the system is inconsistent."""
    if len(b) != len(m):
        raise ValueError("length(b) must equal the number of rows")
    if m:
        ncols = len(m[0])
    elif ncols is None:
        raise ValueError("ncols required for an empty matrix")
    aug = [list(row) + [y] for row, y in zip(m, b)]
    rows, pivots = rref(aug, field, ncols + 1)
    if ncols in pivots:
        return None
    x = [field(0)] * ncols
    for row, pc in zip(rows, pivots):
        x[pc] = row[ncols]
    return x


class Echelon:
    """Incremental sparse row echelon form.

    Rows are dicts ``{column: value}``.  Each stored pivot row is scaled so
    the pivot is one.  An optional tag (also a sparse dict) rides along with
    every row so callers can recover how a reduced row was built.
    """

    def __init__(self, field=QQ):
        self.field = field
        self.pivots = {}
        self.tags = {}

    def __len__(self):
        return len(self.pivots)

    def _axpy(self, target, f, source):
        # target -= f * source, in place
        modp = self.field != QQ
        for k, v in source.items():
            nv = target.get(k, 0) - f * v
            if modp:
                nv %= self.field.p
            if nv:
                target[k] = nv
            else:
                target.pop(k, None)

    def reduce(self, row, tag=None):
        row = dict(row)
        tag = dict(tag) if tag is not None else None
        piv = self.pivots
        while True:
            hits = [c for c in row if c in piv]
            if not hits:
                return row, tag
            c = min(hits)
            f = row[c]
            self._axpy(row, f, piv[c])
            if tag is not None:
                self._axpy(tag, f, self.tags[c])

    def add(self, row, tag=None):
        """Insert a row; returns (residue, residue_tag).  Empty residue means dependent."""
        row, tag = self.reduce(row, tag if tag is not None else {})
        if row:
            c = min(row)
            inv = self.field.inv(row[c])
            modp = self.field != QQ
            scale = (lambda x: x * inv % self.field.p) if modp else (lambda x: x * inv)
            self.pivots[c] = {k: scale(v) for k, v in row.items()}
            self.tags[c] = {k: scale(v) for k, v in tag.items()}
        return row, tag


def sparse_rank(rows, field=QQ):
    e = Echelon(field)
    for r in rows:
        e.add(r)
    return len(e)


def dense_to_sparse(m):
    return [{j: x for j, x in enumerate(row) if x} for row in m]


def sparse_kernel(columns, field=QQ):
    """Kernel of the map sending basis vector j to ``columns[j]`` (sparse dicts)."""
    e = Echelon(field)
    kernel = []
    for j, col in enumerate(columns):
        res, tag = e.add(col, {j: field(1)})
        if not res:
            kernel.append(tag)
    return kernel
