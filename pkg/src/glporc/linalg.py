"""Exact linear algebra over the integers, rationals, and finite fields.

One generic Matrix type serves all three coefficient domains: entries
are Python ints, Fractions, or FieldElems, and every algorithm works by
exact arithmetic only (no floating point anywhere). Integer matrices
are lifted to Fractions where division is required.

The three workhorses beyond plain Gaussian elimination:

* smith_normal_form   -- U*M*V = S with unimodular U, V and a
                         divisibility chain on the diagonal;
* unimodular_triangularize -- reduce a nonsingular integer matrix to
                         upper triangular form using only row swaps,
                         integer row subtractions, and row negations;
* simultaneous_diagonalize -- given a complete family of mutually
                         orthogonal idempotents with P-local entries,
                         build one unimodular P-local change of basis
                         that diagonalizes them all.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .gf import factorize


class Matrix:
    """Immutable dense matrix over an exact coefficient domain."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rws = tuple(tuple(r) for r in rows)
        if not rws or not rws[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rws[0])
        if any(len(r) != width for r in rws):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rws)

    # -- constructors -----------------------------------------------------

    @staticmethod
    def identity(n, one=1, zero=0):
        return Matrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r, c, zero=0):
        return Matrix([[zero] * c for _ in range(r)])

    @staticmethod
    def diagonal(entries, zero=0):
        n = len(entries)
        return Matrix([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def block_diag(blocks, zero=0):
        n = sum(b.nrows for b in blocks)
        rows = [[zero] * n for _ in range(n)]
        at = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[at + i][at + j] = b.rows[i][j]
            at += b.nrows
        return Matrix(rows)

    @staticmethod
    def kron(a, b):
        rows = []
        for i in range(a.nrows):
            for k in range(b.nrows):
                rows.append([a.rows[i][j] * b.rows[k][l]
                             for j in range(a.ncols) for l in range(b.ncols)])
        return Matrix(rows)

    @staticmethod
    def jordan_block(size, one=1, zero=0):
        """Unipotent Jordan block: ones on the diagonal and superdiagonal."""
        rows = [[zero] * size for _ in range(size)]
        for i in range(size):
            rows[i][i] = one
            if i + 1 < size:
                rows[i][i + 1] = one
        return Matrix(rows)

    # -- queries ----------------------------------------------------------

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, idx):
        return self.rows[idx]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(self.rows)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in matrix product")
            bt = list(zip(*other.rows))
            out = []
            for row in self.rows:
                out.append([_dot(row, col) for col in bt])
            return Matrix(out)
        return Matrix([[a * other for a in r] for r in self.rows])

    def __rmul__(self, scalar):
        return Matrix([[scalar * a for a in r] for r in self.rows])

    def __pow__(self, e):
        if not self.is_square or e < 0:
            raise ValueError("power needs a square matrix and e >= 0")
        result = Matrix.identity(self.nrows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def transpose(self):
        return Matrix(list(zip(*self.rows)))

    def map(self, f):
        return Matrix([[f(a) for a in r] for r in self.rows])

    def submatrix(self, row_idx, col_idx):
        return Matrix([[self.rows[i][j] for j in col_idx] for i in row_idx])

    def trace(self):
        t = self.rows[0][0]
        for i in range(1, self.nrows):
            t = t + self.rows[i][i]
        return t

    def to_fractions(self):
        return Matrix([[Fraction(a) if isinstance(a, int) else a for a in r] for r in self.rows])

    def __repr__(self):
        return "Matrix(%r)" % (self.rows,)

    def __str__(self):
        body = "\n".join("[" + "  ".join(str(a) for a in r) + "]" for r in self.rows)
        return body


def _dot(row, col):
    it = iter(zip(row, col))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        acc = acc + a * b
    return acc


def _lift(M):
    """Ints -> Fractions so division is available; field entries pass through."""
    if any(isinstance(a, int) for r in M.rows for a in r):
        return M.to_fractions()
    return M


def rref(M):
    """Reduced row echelon form; returns (Matrix, pivot column list)."""
    A = [list(r) for r in _lift(M).rows]
    nr, nc = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if A[i][c]:
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = A[r][c]
        A[r] = [a / inv for a in A[r]]
        for i in range(nr):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return Matrix(A), pivots


def rank(M):
    """Row rank by exact Gaussian elimination."""
    return len(rref(M)[1])


def nullspace(M):
    """Basis of the right kernel, one vector (list) per free column."""
    R, pivots = rref(M)
    nc = M.ncols
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * nc
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -R.rows[r][fc]
        basis.append(v)
    return basis


def det(M):
    """Exact determinant via elimination (Fractions for integer input)."""
    if not M.is_square:
        raise ValueError("determinant of a non-square matrix")
    A = [list(r) for r in _lift(M).rows]
    n = len(A)
    sign = 1
    result = None
    for c in range(n):
        pr = None
        for i in range(c, n):
            if A[i][c]:
                pr = i
                break
        if pr is None:
            z = A[0][0] - A[0][0]
            return z  # a zero of the right domain
        if pr != c:
            A[c], A[pr] = A[pr], A[c]
            sign = -sign
        piv = A[c][c]
        result = piv if result is None else result * piv
        inv = 1 / piv if not isinstance(piv, Fraction) else Fraction(1) / piv
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    if sign < 0:
        result = -result
    return result


def inverse(M):
    if not M.is_square:
        raise ValueError("inverse of a non-square matrix")
    A = [list(r) for r in _lift(M).rows]
    n = len(A)
    aug = [A[i] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, n):
            if aug[i][c]:
                pr = i
                break
        if pr is None:
            raise ZeroDivisionError("matrix is singular")
        aug[r], aug[pr] = aug[pr], aug[r]
        piv = aug[r][c]
        aug[r] = [a / piv for a in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        r += 1
    return Matrix([row[n:] for row in aug])


def int_inverse(M):
    """Inverse of a unimodular integer matrix, with int entries."""
    inv = inverse(M)
    out = []
    for row in inv.rows:
        new = []
        for a in row:
            if isinstance(a, Fraction):
                if a.denominator != 1:
                    raise ValueError("matrix is not unimodular")
                a = a.numerator
            new.append(a)
        out.append(new)
    return Matrix(out)


# ---------------------------------------------------------------------------
# Smith normal form over the integers.
# ---------------------------------------------------------------------------

def _int_rows(M):
    out = []
    for row in M.rows:
        new = []
        for a in row:
            if isinstance(a, Fraction):
                if a.denominator != 1:
                    raise ValueError("expected an integer matrix")
                a = a.numerator
            elif not isinstance(a, int):
                raise ValueError("expected an integer matrix")
            new.append(a)
        out.append(new)
    return out


def smith_normal_form(M):
    """Return (S, U, V) with U*M*V == S.

    U, V unimodular; S diagonal with nonnegative entries forming a
    divisibility chain d1 | d2 | ... Pivoting always moves a nonzero
    entry of minimal absolute value (ties by row, then column), which
    keeps coefficient growth tame at this scale and is deterministic.
    """
    S = _int_rows(M)
    nr, nc = len(S), len(S[0])
    U = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    V = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_sub(i, j, f):  # row i -= f * row j
        if f:
            S[i] = [a - f * b for a, b in zip(S[i], S[j])]
            U[i] = [a - f * b for a, b in zip(U[i], U[j])]

    def col_sub(i, j, f):  # col i -= f * col j
        if f:
            for r in range(nr):
                S[r][i] -= f * S[r][j]
            for r in range(nc):
                V[r][i] -= f * V[r][j]

    def swap_rows(i, j):
        if i != j:
            S[i], S[j] = S[j], S[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for r in range(nr):
                S[r][i], S[r][j] = S[r][j], S[r][i]
            for r in range(nc):
                V[r][i], V[r][j] = V[r][j], V[r][i]

    t = 0
    while t < min(nr, nc):
        # locate minimal nonzero pivot in the trailing submatrix
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = S[i][j]
                if v and (best is None or abs(v) < abs(S[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, nr):
                if S[i][t]:
                    f = S[i][t] // S[t][t]
                    row_sub(i, t, f)
                    if S[i][t]:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # clear the pivot row
            for j in range(t + 1, nc):
                if S[t][j]:
                    f = S[t][j] // S[t][t]
                    col_sub(j, t, f)
                    if S[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # force divisibility of the trailing submatrix
            witness = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if S[i][j] % S[t][t]:
                        witness = i
                        break
                if witness is not None:
                    break
            if witness is None:
                break
            row_sub(t, witness, -1)  # add the offending row to the pivot row
        t += 1

    for i in range(min(nr, nc)):
        if S[i][i] < 0:
            S[i] = [-a for a in S[i]]
            U[i] = [-a for a in U[i]]
    return Matrix(S), Matrix(U), Matrix(V)


def snf_diagonal(rows, ncols):
    """Diagonal of a Smith form, transforms and chain fix-up skipped.

    The product of the diagonal entries (the invariant that monomial
    solution counting needs) does not depend on the divisibility chain,
    so this fast path avoids the bookkeeping. `rows` is consumed.
    """
    S = rows
    nr = len(S)
    t = 0
    ndiag = []
    while t < min(nr, ncols):
        best = None
        bv = 0
        for i in range(t, nr):
            ri = S[i]
            for j in range(t, ncols):
                v = ri[j]
                if v and (best is None or -bv < v < bv):
                    best = (i, j)
                    bv = abs(v)
            if bv == 1:
                break
        if best is None:
            break
        bi, bj = best
        if bi != t:
            S[t], S[bi] = S[bi], S[t]
        if bj != t:
            for r in range(nr):
                S[r][t], S[r][bj] = S[r][bj], S[r][t]
        while True:
            dirty = False
            piv = S[t][t]
            for i in range(t + 1, nr):
                v = S[i][t]
                if v:
                    f = v // piv
                    if f:
                        S[i] = [a - f * b for a, b in zip(S[i], S[t])]
                    if S[i][t]:
                        S[t], S[i] = S[i], S[t]
                        dirty = True
                        piv = S[t][t]
            if dirty:
                continue
            piv = S[t][t]
            for j in range(t + 1, ncols):
                v = S[t][j]
                if v:
                    f = v // piv
                    if f:
                        for r in range(t, nr):
                            S[r][j] -= f * S[r][t]
                    if S[t][j]:
                        for r in range(t, nr):
                            S[r][t], S[r][j] = S[r][j], S[r][t]
                        dirty = True
                        piv = S[t][t]
            if not dirty:
                break
        ndiag.append(abs(S[t][t]))
        t += 1
    return ndiag


def unimodular_triangularize(C):
    """Q with det +-1 and Q*C upper triangular, via three row operations.

    Only row swaps, subtraction of integer multiples of one row from
    another, and row negation are used; Q is their product.
    """
    if not C.is_square:
        raise ValueError("triangularization needs a square matrix")
    n = C.nrows
    A = _int_rows(C)
    Q = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            Q[i], Q[j] = Q[j], Q[i]

    def sub(i, j, f):
        if f:
            A[i] = [a - f * b for a, b in zip(A[i], A[j])]
            Q[i] = [a - f * b for a, b in zip(Q[i], Q[j])]

    def negate(i):
        A[i] = [-a for a in A[i]]
        Q[i] = [-a for a in Q[i]]

    for c in range(n):
        if not any(A[i][c] for i in range(c, n)):
            raise ValueError("matrix is singular")
        while True:
            # pick the entry of least magnitude at or below the diagonal
            best = None
            for i in range(c, n):
                v = A[i][c]
                if v and (best is None or abs(v) < abs(A[best][c])):
                    best = i
            swap(c, best)
            done = True
            for i in range(c + 1, n):
                if A[i][c]:
                    sub(i, c, A[i][c] // A[c][c])
                    if A[i][c]:
                        done = False
            if done:
                break
        if A[c][c] < 0:
            negate(c)
    return Matrix(Q)


# ---------------------------------------------------------------------------
# Simultaneous diagonalization of orthogonal idempotents.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PLocalMatrix:
    """A rational matrix whose entry denominators only use primes in `primes`."""
    matrix: Matrix
    primes: frozenset

    def check(self):
        bad = denominator_primes(self.matrix) - self.primes
        if bad:
            raise ValueError("denominators use primes outside P: %s" % sorted(bad))
        return True


def denominator_primes(M):
    primes = set()
    for row in M.rows:
        for a in row:
            if isinstance(a, Fraction) and a.denominator > 1:
                primes.update(factorize(a.denominator))
    return primes


def _primitive_column(vec):
    """Clear denominators and divide by the content; returns an int list."""
    den = 1
    for a in vec:
        f = a if isinstance(a, Fraction) else Fraction(a)
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(Fraction(a) * den) for a in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise ValueError("zero column in eigenbasis")
    return [v // g for v in ints]


def simultaneous_diagonalize(idempotents, primes=frozenset()):
    """One unimodular P-local T with every T^-1 * E_i * T diagonal (0/1 entries).

    Preconditions: the E_i are idempotent, mutually orthogonal, sum to
    the identity, and have P-local entries. Construction: stack primitive
    integer bases of the eigenvalue-1 spaces into C (columns grouped by
    idempotent, in input order), triangularize C with unimodular Q, push
    each idempotent through to F_i = Q E_i Q^-1, assemble the unit upper
    triangular correction E whose r-th column is column r of the F owning
    that slot, and return T = Q^-1 E.
    """
    es = [e.to_fractions() for e in idempotents]
    if not es:
        raise ValueError("need at least one idempotent")
    n = es[0].nrows
    primes = frozenset(primes)
    for e in es:
        if not e.is_square or e.nrows != n:
            raise ValueError("idempotents must be square and of equal size")
        if e * e != e:
            raise ValueError("input is not idempotent")
        extra = denominator_primes(e) - primes
        if extra:
            raise ValueError("idempotent denominators use primes outside P: %s" % sorted(extra))
    for i, a in enumerate(es):
        for j, b in enumerate(es):
            if i != j and a * b != Matrix.zeros(n, n):
                raise ValueError("idempotents %d and %d are not orthogonal" % (i, j))
    total = es[0]
    for e in es[1:]:
        total = total + e
    if total != Matrix.identity(n):
        raise ValueError("idempotents do not sum to the identity")

    ident = Matrix.identity(n)
    columns = []
    dims = []
    for e in es:
        basis = nullspace(e - ident)  # = image of e
        dims.append(len(basis))
        for vec in basis:
            columns.append(_primitive_column(vec))
    if sum(dims) != n:
        raise ValueError("eigenspace dimensions do not fill the space")
    C = Matrix([[columns[j][i] for j in range(n)] for i in range(n)])

    Q = unimodular_triangularize(C)
    Qinv = int_inverse(Q)
    fs = [Q.to_fractions() * e * Qinv.to_fractions() for e in es]

    owner = []
    for i, d in enumerate(dims):
        owner.extend([i] * d)
    corr = [[Fraction(0)] * n for _ in range(n)]
    for r in range(n):
        F = fs[owner[r]]
        for x in range(n):
            corr[x][r] = F.rows[x][r]
    E = Matrix(corr)
    for r in range(n):
        if E.rows[r][r] != 1:
            raise ValueError("correction matrix is not unit triangular; "
                             "inputs violate the idempotent contract")
        for x in range(r + 1, n):
            if E.rows[x][r] != 0:
                raise ValueError("correction matrix is not upper triangular")

    T = Qinv.to_fractions() * E

    d = det(T)
    if d not in (1, -1, Fraction(1), Fraction(-1)):
        raise AssertionError("diagonalizer determinant %s is not a unit" % d)
    result = PLocalMatrix(T, primes)
    result.check()
    Tinv = inverse(T)
    acc = Matrix.zeros(n, n)
    for e in es:
        conj = Tinv * e * T
        for i in range(n):
            for j in range(n):
                v = conj.rows[i][j]
                if i != j and v != 0:
                    raise AssertionError("conjugate is not diagonal")
                if i == j and v not in (0, 1):
                    raise AssertionError("diagonal entries must be 0 or 1")
        acc = acc + conj
    if acc != Matrix.identity(n):
        raise AssertionError("diagonal conjugates do not sum to the identity")
    return result
