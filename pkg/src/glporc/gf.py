"""Exact arithmetic in finite fields GF(p^k).

A field is GF(p)[x] modulo the lexicographically smallest monic
irreducible polynomial of degree k (coefficient tuples compared low
degree first), so field construction is deterministic. Elements carry
their coordinate tuple in the power basis. Splitting fields are
realized as one field of order q^d; the subfield of order q is the
fixed set of x -> x^q, so no embedding bookkeeping is ever needed.

Also hosts small number-theory helpers and polynomial arithmetic over
a field (coefficient tuples of FieldElem, low degree first), which the
canonical-form machinery builds on.
"""

import itertools
from fractions import Fraction

DEFAULT_MAX_ORDER = 1 << 24


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Prime factorization as a dict prime -> exponent (trial division)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_split(q):
    """Return (p, k) with q == p**k, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    [(p, k)] = f.items()
    return p, k


def is_prime_power(q):
    return prime_power_split(q) is not None


# -- polynomial arithmetic over GF(p) on int tuples (modulus search) --------

def _zmp_trim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _zmp_divmod(f, g, p):
    """Division with remainder in GF(p)[x]; f, g are int lists, g monic-led."""
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    quo = [0] * max(len(f) - dg, 0)
    for k in range(len(f) - dg - 1, -1, -1):
        c = (f[k + dg] * inv_lead) % p
        quo[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] = (f[k + j] - c * b) % p
    return quo, _zmp_trim(f)


def _zmp_is_irreducible(f, p):
    """Trial division by every lower-degree monic over GF(p)."""
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if not _zmp_divmod(f, g, p)[1]:
                return False
    return True


def _smallest_irreducible(p, k):
    for tail in itertools.product(range(p), repeat=k):
        f = list(tail) + [1]
        if _zmp_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible of degree %d over GF(%d)" % (k, p))


class FieldElem:
    """Element of a FiniteField: coordinates in the power basis.

    Arithmetic coerces ints and Fractions (with denominator prime to p),
    so matrix code can mix field elements with literal 0 and 1.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field):
        self.coeffs = coeffs
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.elem(other)
        if isinstance(other, Fraction):
            return self.field.elem(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FieldElem(tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)), self.field)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElem(tuple((-a) % p for a in self.coeffs), self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FieldElem(tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)), self.field)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.field._mul(self.coeffs, o.coeffs), self.field)

    __rmul__ = __mul__

    def inverse(self):
        return FieldElem(self.field._inv(self.coeffs), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        return elem_pow(self, e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        return "FieldElem(%r, GF(%d))" % (self.coeffs, self.field.order)

    def __str__(self):
        if self.field.k == 1:
            return str(self.coeffs[0])
        from .polys import format_poly
        return format_poly(list(self.coeffs), "t")


class FiniteField:
    """GF(p^k) with a fixed deterministic modulus.

    Immutable after construction; all operations are pure, so instances
    are safe to share across parallel workers.
    """

    def __init__(self, p, k, max_order=DEFAULT_MAX_ORDER):
        if not is_prime(p):
            raise ValueError("characteristic %r is not prime" % (p,))
        if k < 1:
            raise ValueError("extension degree must be positive")
        if p ** k > max_order:
            raise ValueError("field order %d exceeds the size bound %d" % (p ** k, max_order))
        self.p = p
        self.k = k
        self.order = p ** k
        self.modulus = _smallest_irreducible(p, k)
        # reduction table: x^(k+i) mod modulus, 0 <= i < k-1
        red = []
        cur = [(-c) % p for c in self.modulus[:k]]  # x^k
        red.append(tuple(cur))
        for _ in range(k - 2):
            cur = [0] + cur
            top = cur.pop()
            if top:
                cur = [(a + top * b) % p for a, b in zip(cur, red[0])]
            red.append(tuple(cur))
        self._red = red
        self._elements = None
        self._index = None
        self._subfields = {}

    # -- element construction -------------------------------------------

    def elem(self, value):
        """Coerce an int, Fraction, or coefficient sequence."""
        if isinstance(value, FieldElem):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            cs = [0] * self.k
            cs[0] = value % self.p
            return FieldElem(tuple(cs), self)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by the characteristic")
            num = self.elem(value.numerator)
            den = self.elem(value.denominator)
            return num * den.inverse()
        cs = tuple(int(c) % self.p for c in value)
        if len(cs) != self.k:
            raise ValueError("expected %d coordinates" % self.k)
        return FieldElem(cs, self)

    def zero(self):
        return self.elem(0)

    def one(self):
        return self.elem(1)

    def gen(self):
        """The power-basis generator x; only meaningful for k >= 2."""
        if self.k == 1:
            raise ValueError("prime field has no power-basis generator")
        cs = [0] * self.k
        cs[1] = 1
        return FieldElem(tuple(cs), self)

    def elements(self):
        """All p^k elements, in a fixed enumeration order."""
        if self._elements is None:
            elems = tuple(FieldElem(cs, self)
                          for cs in itertools.product(range(self.p), repeat=self.k))
            self._elements = elems
            self._index = {e.coeffs: i for i, e in enumerate(elems)}
        return self._elements

    def index(self, x):
        self.elements()
        return self._index[x.coeffs]

    # -- core arithmetic ---------------------------------------------------

    def _mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = conv[:k]
        for i in range(k, 2 * k - 1):
            c = conv[i]
            if c:
                row = self._red[i - k]
                for j, r in enumerate(row):
                    out[j] += c * r
        return tuple(v % p for v in out)

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("zero has no inverse")
        p = self.p
        if self.k == 1:
            return (pow(a[0], -1, p),)
        # extended Euclid in GF(p)[x]
        r0, r1 = list(self.modulus), _zmp_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            q, r = _zmp_divmod(r0, r1, p)
            r0, r1 = r1, r
            # s0 - q*s1
            prod = [0] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        prod[i + j] = (prod[i + j] + qi * sj) % p
            new = [0] * max(len(s0), len(prod))
            for i, c in enumerate(s0):
                new[i] = c
            for i, c in enumerate(prod):
                new[i] = (new[i] - c) % p
            s0, s1 = s1, _zmp_trim(new)
        # r0 is the (constant) gcd; normalize
        c = pow(r0[0], -1, p)
        out = [(v * c) % p for v in s0]
        out += [0] * (self.k - len(out))
        return tuple(out[:self.k])

    # -- subfields and orders ---------------------------------------------

    def subfield_orders(self):
        return [self.p ** d for d in range(1, self.k + 1) if self.k % d == 0]

    def subfield_elements(self, q):
        """Elements fixed by x -> x^q, i.e. the copy of GF(q) inside."""
        if q not in self.subfield_orders():
            raise ValueError("%d is not a subfield order of GF(%d)" % (q, self.order))
        if q not in self._subfields:
            self._subfields[q] = tuple(x for x in self.elements() if elem_pow(x, q) == x)
        return self._subfields[q]

    def multiplicative_order(self, x):
        if not x:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        for prime in factorize(n):
            while n % prime == 0 and elem_pow(x, n // prime) == self.one():
                n //= prime
        return n

    def primitive_element(self):
        """First element (in enumeration order) generating the unit group."""
        target = self.order - 1
        for x in self.elements():
            if x and self.multiplicative_order(x) == target:
                return x
        raise AssertionError("unit group not cyclic; field construction is broken")

    def __repr__(self):
        return "FiniteField(p=%d, k=%d)" % (self.p, self.k)


_field_cache = {}


def make_field(p, k=None, max_order=DEFAULT_MAX_ORDER):
    """Field of order p^k; make_field(q) splits a prime power q."""
    if k is None:
        pk = prime_power_split(p)
        if pk is None:
            raise ValueError("%r is not a prime power" % (p,))
        p, k = pk
    key = (p, k)
    if key not in _field_cache:
        _field_cache[key] = FiniteField(p, k, max_order=max_order)
    return _field_cache[key]


def frobenius(x, q):
    """x -> x^q for a subfield order q; fixes exactly the subfield GF(q)."""
    field = x.field
    if q not in field.subfield_orders():
        raise ValueError("%d is not a subfield order of GF(%d)" % (q, field.order))
    return elem_pow(x, q)


def elem_pow(x, e):
    """x**e with negative exponents via the extended-gcd inverse."""
    field = x.field
    if e < 0:
        x = x.inverse()
        e = -e
    result = field.one()
    base = x
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# Polynomials over a finite field: tuples of FieldElem, low degree first.
# ---------------------------------------------------------------------------

def fp(field, coeffs):
    """Build a normalized polynomial from ints/elements."""
    cs = [field.elem(c) if not isinstance(c, FieldElem) else c for c in coeffs]
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def fp_x(field):
    return (field.zero(), field.one())


def fp_deg(f):
    return len(f) - 1


def fp_add(field, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = out[i] + c
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def fp_neg(f):
    return tuple(-c for c in f)


def fp_sub(field, f, g):
    return fp_add(field, f, fp_neg(g))


def fp_mul(field, f, g):
    if not f or not g:
        return ()
    out = [field.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def fp_scale(field, f, c):
    if not c:
        return ()
    return tuple(a * c for a in f)


def fp_divmod(field, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    dg = len(g) - 1
    inv_lead = g[-1].inverse()
    quo = [field.zero()] * max(len(rem) - dg, 0)
    for k in range(len(rem) - dg - 1, -1, -1):
        c = rem[k + dg] * inv_lead
        quo[k] = c
        if c:
            for j, b in enumerate(g):
                rem[k + j] = rem[k + j] - c * b
    while rem and not rem[-1]:
        rem.pop()
    while quo and not quo[-1]:
        quo.pop()
    return tuple(quo), tuple(rem)


def fp_monic(field, f):
    if not f:
        return f
    return fp_scale(field, f, f[-1].inverse())


def fp_gcd(field, f, g):
    while g:
        f, g = g, fp_divmod(field, f, g)[1]
    return fp_monic(field, f)


def fp_pow(field, f, e):
    result = fp(field, [1])
    base = f
    while e:
        if e & 1:
            result = fp_mul(field, result, base)
        base = fp_mul(field, base, base)
        e >>= 1
    return result


def fp_eval(field, f, x):
    acc = field.zero()
    for c in reversed(f):
        acc = acc * x + c
    return acc


def fp_str(f, var="x"):
    """Render with integer-looking coefficients where possible."""
    parts = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if not c:
            continue
        cs = str(c)
        body = cs if k == 0 else ((("" if cs == "1" else "(%s)*" % cs)) + (var if k == 1 else "%s^%d" % (var, k)))
        parts.append(body)
    return " + ".join(parts) if parts else "0"


def monic_polys(field, degree, base_q=None):
    """All monic polynomials of exact degree with subfield coefficients.

    Deterministic order: coefficient tuples over the subfield element
    enumeration, low-degree coordinate varying slowest.
    """
    if base_q is None:
        pool = field.elements()
    else:
        pool = field.subfield_elements(base_q)
    one = field.one()
    for tail in itertools.product(pool, repeat=degree):
        yield tuple(tail) + (one,)


def fp_is_irreducible(field, f, base_q=None):
    """Trial division against all lower-degree monics over the subfield."""
    deg = fp_deg(f)
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in monic_polys(field, d, base_q):
            if not fp_divmod(field, f, g)[1]:
                return False
    return True


def irreducible_monics(field, degree, base_q=None):
    for f in monic_polys(field, degree, base_q):
        if fp_is_irreducible(field, f, base_q):
            yield f


def fp_roots(field, f):
    """All roots in the field, by exhaustive search."""
    return [x for x in field.elements() if not fp_eval(field, f, x)]


def minimal_poly(field, lam, base_q):
    """Minimal polynomial over the subfield GF(base_q): prod (x - lam^(q^j))."""
    if base_q not in field.subfield_orders():
        raise ValueError("%d is not a subfield order" % base_q)
    conj = lam
    seen = []
    while True:
        seen.append(conj)
        conj = elem_pow(conj, base_q)
        if conj == lam:
            break
    f = fp(field, [1])
    for c in seen:
        f = fp_mul(field, f, (-c, field.one()))
    return f
