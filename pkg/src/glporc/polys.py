"""Exact univariate polynomials in the field-order variable q.

Two representations are used throughout the package:

* ``QPoly`` -- immutable polynomials with rational (``Fraction``)
  coefficients, used for class-size polynomials and the branch
  polynomials of PORC functions.
* "zpoly" -- plain tuples of ints, low degree first, used for the
  integer exponent polynomials that appear in monomial equations.
  These are cheap, hashable and need only a handful of operations,
  provided as module functions with a ``zp_`` prefix.
"""

from fractions import Fraction
from math import gcd


class QPoly:
    """Polynomial in q with exact rational coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ----------------------------------------------------

    @staticmethod
    def constant(c):
        return QPoly((c,))

    @staticmethod
    def monomial(c, k):
        """c * q**k"""
        return QPoly((0,) * k + (c,))

    @staticmethod
    def variable():
        return QPoly((0, 1))

    @staticmethod
    def interpolate(points):
        """Lagrange interpolation through exact (x, y) pairs with distinct x."""
        xs = [Fraction(x) for x, _ in points]
        if len(set(xs)) != len(xs):
            raise ValueError("interpolation nodes must be distinct")
        result = QPoly()
        for i, (xi, yi) in enumerate(points):
            term = QPoly.constant(yi)
            for j, (xj, _) in enumerate(points):
                if i == j:
                    continue
                # term *= (q - xj) / (xi - xj)
                term = term * QPoly((-Fraction(xj), 1))
                term = term * QPoly.constant(Fraction(1, 1) / (Fraction(xi) - Fraction(xj)))
            result = result + term
        return result

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == QPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly(tuple(c * other for c in self.coeffs))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        """Exact rational polynomial division with remainder."""
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = other.degree, other.coeffs[-1]
        quo = [Fraction(0)] * max(len(rem) - db, 0)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db] / lb
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return QPoly(quo), QPoly(rem)

    def evaluate(self, x):
        """Horner evaluation; exact Fraction result."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def gcd(self, other):
        """Monic gcd over the rationals."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, divmod(a, b)[1]
        if a.is_zero():
            return a
        return a * (Fraction(1) / a.coeffs[-1])

    def primitive(self):
        """Split into (scale, primitive integer polynomial with positive lead).

        self == scale * primitive, primitive has integer coefficients with
        gcd 1 and positive leading coefficient.
        """
        if self.is_zero():
            return Fraction(0), QPoly()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in self.coeffs]
        g = 0
        for v in nums:
            g = gcd(g, v)
        if nums[-1] < 0:
            g = -g
        prim = QPoly([v // g for v in nums])
        return Fraction(g, den), prim

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        return format_poly([c for c in self.coeffs], "q")

    def __repr__(self):
        return "QPoly(%r)" % (self.coeffs,)


def format_poly(coeffs, var="q"):
    """Human form of a coefficient list, highest degree first."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            body = str(c)
        else:
            mag = "" if abs(c) == 1 else str(abs(c)) + "*"
            if c == -1:
                mag = "-"
            elif c < 0:
                mag = "-" + str(abs(c)) + "*"
            elif abs(c) == 1:
                mag = ""
            body = mag + (var if k == 1 else "%s^%d" % (var, k))
            if c < 0 and not body.startswith("-"):
                body = "-" + body
        terms.append(body)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# ---------------------------------------------------------------------------
# Integer exponent polynomials as plain tuples, low degree first.
# ---------------------------------------------------------------------------

def zp(coeffs):
    """Normalize an int coefficient sequence (strip trailing zeros)."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(int(c) for c in cs)


ZP_ZERO = ()
ZP_ONE = (1,)


def zp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return zp(out)


def zp_neg(a):
    return tuple(-c for c in a)


def zp_sub(a, b):
    return zp_add(a, zp_neg(b))


def zp_scale(a, c):
    if c == 0:
        return ()
    return zp(v * c for v in a)


def zp_shift(a, k):
    """Multiply by q**k."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def zp_eval(a, q):
    acc = 0
    for c in reversed(a):
        acc = acc * q + c
    return acc


def zp_mod_cyclic(a, n):
    """Remainder of a modulo q**n - 1: fold coefficient at q**(n+i) onto q**i."""
    if n < 1:
        raise ValueError("modulus degree must be positive")
    out = list(a)
    for d in range(len(out) - 1, n - 1, -1):
        c = out[d]
        if c:
            out[d] = 0
            out[d - n] += c
    return zp(out)


def zp_str(a, var="q"):
    return format_poly(list(a), var)
