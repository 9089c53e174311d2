"""Dense exact linear algebra on lists of rationals.

Matrices are lists of row lists; vectors are flat lists (or tuples).
Everything is exact: elimination uses plain Gaussian pivoting, which is fine
at the desk scale this package targets (ambient dimension <= 64).
"""

from .rationals import ZERO, ONE, Rat


def vec(xs):
    return [Rat(x) for x in xs]


def dot(a, b):
    s = ZERO
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def vadd(a, b):
    return [x + y for x, y in zip(a, b)]


def vsub(a, b):
    return [x - y for x, y in zip(a, b)]


def vscale(c, a):
    return [c * x for x in a]


def mat_vec(m, v):
    return [dot(row, v) for row in m]


def mat_mul(a, b):
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def transpose(m):
    return [list(col) for col in zip(*m)]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def kron_vec(a, b):
    return [x * y for x in a for y in b]


def kron_mat(a, b):
    rows = []
    for ra in a:
        for rb in b:
            rows.append([x * y for x in ra for y in rb])
    return rows


def rref(m):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(m):
    if not m:
        return 0
    return len(rref(m)[1])


def nullspace(m):
    """Basis of {x : m x = 0} as a list of vectors."""
    if not m:
        return []
    ncols = len(m[0])
    rows, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def solve(m, b):
    """One exact solution of m x = b, or None if inconsistent."""
    if not m:
        return None if any(b) else []
    ncols = len(m[0])
    aug = [list(row) + [bv] for row, bv in zip(m, b)]
    rows, pivots = rref(aug)
    for row in rows:
        if row[-1] and not any(row[:-1]):
            return None
    x = [ZERO] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = rows[r][-1]
    return x


def coords_in_basis(basis, v):
    """Coefficients expressing v over the given basis vectors, or None."""
    return solve(transpose(basis), v)


def primitive(v):
    """Scale a rational vector to coprime integers, preserving direction."""
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return [Rat(x) for x in ints]


def gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def lcm(a, b):
    return a // gcd(a, b) * b
