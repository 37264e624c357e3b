"""Canonical forms and conjugacy machinery over GF(q).

A matrix type records, per distinct irreducible dividing the primary
invariant factors, the degree of the irreducible and the multiset of
exponents it carries. The type is a complete conjugacy invariant up to
the choice of eigenvalues, its class size is a polynomial in q, and
there are finitely many types for each ambient dimension.

Factorization of the small characteristic polynomials met here is done
by exhaustive trial division in ascending degree: fields are tiny, so
nothing cleverer pays off.
"""

from collections import Counter

from .gf import (FieldElem, fp, fp_add, fp_deg, fp_divmod, fp_monic, fp_mul,
                 fp_sub, monic_polys)
from .linalg import Matrix, det, rank
from .polys import QPoly


class MatrixType:
    """Multiset of (irreducible degree, exponent multiset) pairs."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        canon = []
        for d, exps in pairs:
            d = int(d)
            exps = tuple(sorted(int(e) for e in exps))
            if d < 1 or not exps or any(e < 1 for e in exps):
                raise ValueError("degrees and exponents must be positive")
            canon.append((d, exps))
        object.__setattr__(self, "pairs", tuple(sorted(canon)))

    @property
    def weight(self):
        """Ambient dimension: sum over pairs of degree * (sum of exponents)."""
        return sum(d * sum(exps) for d, exps in self.pairs)

    def degrees(self):
        return tuple(d for d, _ in self.pairs)

    def __eq__(self, other):
        if not isinstance(other, MatrixType):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return "MatrixType(%r)" % (self.pairs,)

    def __str__(self):
        inner = ",".join("(%d,{%s})" % (d, ",".join(map(str, exps))) for d, exps in self.pairs)
        return "{%s}" % inner


def partitions(n):
    """All partitions of n as weakly decreasing tuples."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining, biggest, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, biggest), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def conjugate_partition(parts):
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(max(parts)))


MAX_TYPE_DIM = 6


def enumerate_types(m):
    """All matrix types of weight m, canonically sorted, duplicate-free."""
    if m < 1:
        raise ValueError("dimension must be positive")
    if m > MAX_TYPE_DIM:
        raise ValueError("type enumeration bounded at m <= %d" % MAX_TYPE_DIM)
    atoms = []  # possible (degree, exponent multiset) pairs of weight <= m
    for d in range(1, m + 1):
        for s in range(1, m // d + 1):
            for lam in partitions(s):
                atoms.append((d, tuple(sorted(lam))))
    atoms.sort()
    found = []

    def rec(start, remaining, acc):
        if remaining == 0:
            found.append(MatrixType(list(acc)))
            return
        for idx in range(start, len(atoms)):
            d, exps = atoms[idx]
            w = d * sum(exps)
            if w <= remaining:
                acc.append(atoms[idx])
                rec(idx, remaining - w, acc)
                acc.pop()

    rec(0, m, [])
    return sorted(found, key=lambda t: t.pairs)


def unipotent_partition(U):
    """Jordan block sizes of a unipotent matrix, from ranks of (U - I)^k."""
    n = U.nrows
    if not U.is_square:
        raise ValueError("need a square matrix")
    N = U - Matrix.identity(n)
    ranks = [n]
    P = N
    while True:
        r = rank(P)
        ranks.append(r)
        if r == 0:
            break
        if len(ranks) > n + 1:
            raise ValueError("matrix is not unipotent")
        P = P * N
    parts = []
    for k in range(1, len(ranks)):
        ge_k = ranks[k - 1] - ranks[k]
        ge_k1 = ranks[k] - (ranks[k + 1] if k + 1 < len(ranks) else 0)
        parts.extend([k] * (ge_k - ge_k1))
    return tuple(sorted(parts, reverse=True))


# ---------------------------------------------------------------------------
# Invariant factors via the Smith form of xI - A over GF(q)[x].
# ---------------------------------------------------------------------------

def _polymat_snf_diagonal(field, A):
    """Diagonal of the Smith form of a matrix of field polynomials."""
    S = [list(row) for row in A]
    nr, nc = len(S), len(S[0])
    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                f = S[i][j]
                if f and (best is None or fp_deg(f) < fp_deg(S[best[0]][best[1]])):
                    best = (i, j)
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
            for i in range(t + 1, nr):
                if S[i][t]:
                    q, _ = fp_divmod(field, S[i][t], S[t][t])
                    S[i] = [fp_sub(field, a, fp_mul(field, q, b)) for a, b in zip(S[i], S[t])]
                    if S[i][t]:
                        S[t], S[i] = S[i], S[t]
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, nc):
                if S[t][j]:
                    q, _ = fp_divmod(field, S[t][j], S[t][t])
                    for rr in range(nr):
                        S[rr][j] = fp_sub(field, S[rr][j], fp_mul(field, q, S[rr][t]))
                    if S[t][j]:
                        for rr in range(nr):
                            S[rr][t], S[rr][j] = S[rr][j], S[rr][t]
                        dirty = True
            if dirty:
                continue
            # divisibility of the trailing block
            witness = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if S[i][j] and fp_divmod(field, S[i][j], S[t][t])[1]:
                        witness = i
                        break
                if witness is not None:
                    break
            if witness is None:
                break
            S[t] = [fp_add(field, a, b) for a, b in zip(S[t], S[witness])]
        t += 1
    return [fp_monic(field, S[i][i]) for i in range(min(nr, nc))]


def invariant_factors(A):
    """Nonconstant invariant factors of an invertible matrix over its field."""
    field = _field_of(A)
    n = A.nrows
    if det(A) == field.zero():
        raise ValueError("matrix is singular")
    one = field.one()
    xIA = []
    for i in range(n):
        row = []
        for j in range(n):
            const = -A.rows[i][j] if isinstance(A.rows[i][j], FieldElem) else field.elem(-A.rows[i][j])
            if i == j:
                row.append(fp(field, [const, one]))
            else:
                row.append(fp(field, [const]))
        xIA.append(row)
    diag = _polymat_snf_diagonal(field, xIA)
    return [f for f in diag if fp_deg(f) >= 1]


def _field_of(A):
    for row in A.rows:
        for a in row:
            if isinstance(a, FieldElem):
                return a.field
    raise ValueError("matrix has no field elements")


def factor_monic(field, f, base_q=None):
    """Factor a monic polynomial into irreducibles over the subfield GF(base_q).

    Exhaustive trial division in ascending degree; any divisor found this
    way is necessarily irreducible. Returns [(irreducible, exponent)].
    """
    if base_q is None:
        base_q = field.order
    factors = []
    g = f
    d = 1
    while fp_deg(g) > 0 and d <= fp_deg(g) // 2:
        for cand in monic_polys(field, d, base_q):
            count = 0
            while True:
                quo, rem = fp_divmod(field, g, cand)
                if rem:
                    break
                g = quo
                count += 1
            if count:
                factors.append((cand, count))
            if fp_deg(g) < 2 * d:
                break
        d += 1
    if fp_deg(g) > 0:
        factors.append((g, 1))
    return factors


def primary_invariant_factors(A, base_q=None):
    """Prime-power factors of the invariant factor decomposition.

    Multiset of (monic irreducible, exponent) pairs; an irreducible
    appearing in several invariant factors appears several times.
    """
    field = _field_of(A)
    if base_q is None:
        base_q = field.order
    out = []
    for f in invariant_factors(A):
        out.extend(factor_monic(field, f, base_q))
    return out


def type_of(A, base_q=None):
    """Group the primary invariant factors by irreducible into a MatrixType."""
    prim = primary_invariant_factors(A, base_q)
    groups = {}
    for irr, e in prim:
        groups.setdefault(irr, []).append(e)
    return MatrixType([(fp_deg(irr), exps) for irr, exps in groups.items()])


def companion_matrix(field, f):
    """Companion matrix of a monic polynomial over its field."""
    n = fp_deg(f)
    if n < 1:
        raise ValueError("companion matrix needs degree >= 1")
    rows = [[field.zero()] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i + 1][i] = field.one()
    for i in range(n):
        rows[i][n - 1] = -f[i]
    return Matrix(rows)


# ---------------------------------------------------------------------------
# Class-size polynomials.
# ---------------------------------------------------------------------------

def gl_order_poly(m):
    """|GL(m,q)| as a polynomial in q: prod (q^m - q^i), i < m."""
    if m < 1:
        raise ValueError("dimension must be positive")
    result = QPoly.constant(1)
    for i in range(m):
        result = result * (QPoly.monomial(1, m) - QPoly.monomial(1, i))
    return result


def _unipotent_centralizer_poly(lam, d):
    """Centralizer order of a single-eigenvalue block, as a polynomial in q.

    For a module with Jordan partition lam over a field of order Q the
    automorphism group has order
        Q^(sum of squared conjugate parts) * prod_i phi_{m_i}(1/Q),
    where m_i is the multiplicity of part i. Substituting Q = q^d and
    clearing the 1/Q factors gives an honest polynomial in q.
    """
    conj = conjugate_partition(lam)
    exp = sum(c * c for c in conj)
    mults = Counter(lam)
    shift = sum(m * (m + 1) // 2 for m in mults.values())
    poly = QPoly.monomial(1, d * (exp - shift))
    for m_i in mults.values():
        for r in range(1, m_i + 1):
            poly = poly * (QPoly.monomial(1, d * r) - QPoly.constant(1))
    return poly


def centralizer_order_poly(T):
    """Centralizer order of a matrix of type T in GL(m,q), m = T.weight."""
    poly = QPoly.constant(1)
    for d, exps in T.pairs:
        poly = poly * _unipotent_centralizer_poly(tuple(sorted(exps, reverse=True)), d)
    return poly


def class_size_poly(T):
    """Conjugacy class size of any matrix of type T, as a polynomial in q.

    Exact division |GL(m,q)| / centralizer; a nonzero remainder would be
    an implementation bug in the centralizer formula, not a data error.
    """
    m = T.weight
    quo, rem = divmod(gl_order_poly(m), centralizer_order_poly(T))
    if not rem.is_zero():
        raise ArithmeticError("centralizer polynomial does not divide the group order "
                              "for type %s" % T)
    return quo
