"""Exact arithmetic in Q(v), rational functions of one formal variable.

Every coefficient in this package is a :class:`Scalar`: a reduced fraction
of univariate polynomials over the rationals.  The deformation parameter q
is not a primitive object; a :class:`PowerBasis` declares q = v**L, so that
the half power q**(1/2) = v**(L/2) and, when 2N divides L, the N-th root
p = q**(1/N) = v**(L/N) exist exactly.  No floating point, no tolerances.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

Coeffs = tuple  # tuple[Fraction, ...], ascending degree, no trailing zeros

_F0 = Fraction(0)
_F1 = Fraction(1)


class ScalarError(ArithmeticError):
    """Raised on invalid scalar arithmetic (division by zero etc.)."""


class PoleError(ScalarError):
    """Raised when a scalar is specialized at a zero of its denominator."""


# ---------------------------------------------------------------------------
# dense polynomial helpers (private): tuples of Fractions, ascending degree
# ---------------------------------------------------------------------------

def _trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def _pscale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [_F0] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lb
        if c:
            q[i] = c
            for j, cb in enumerate(b):
                a[i + j] -= c * cb
    return _trim(q), _trim(a)


def _content_primitive(a):
    """Clear denominators and content: return (int coeff list, content Fraction)."""
    if not a:
        return [], _F0
    den = 1
    for c in a:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = _int_gcd(g, abs(c))
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints], Fraction(g, den)


def _pgcd(a, b):
    """Monic gcd via the primitive Euclidean remainder sequence over Z."""
    if not a:
        return _pmonic(b)
    if not b:
        return _pmonic(a)
    fa, _ = _content_primitive(a)
    fb, _ = _content_primitive(b)
    while fb:
        fa_f = tuple(Fraction(c) for c in fa)
        fb_f = tuple(Fraction(c) for c in fb)
        _, r = _pdivmod(fa_f, fb_f)
        fa = fb
        if r:
            fb, _ = _content_primitive(r)
        else:
            fb = []
    return _pmonic(tuple(Fraction(c) for c in fa))


def _pmonic(a):
    if not a or a[-1] == 1:
        return _trim(a)
    lc = a[-1]
    return tuple(c / lc for c in a)


def _peval(a, x):
    acc = _F0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _vpower_exp(p):
    """k when p == v**k exactly (monic monomial), else None."""
    if p[-1] != 1:
        return None
    for c in p[:-1]:
        if c:
            return None
    return len(p) - 1


def _low_order(p):
    k = 0
    while k < len(p) and not p[k]:
        k += 1
    return k


_POLY_ONE = (_F1,)


class Scalar:
    """An element of Q(v) in canonical form.

    Canonical form: numerator/denominator coprime, denominator monic, zero
    stored as 0/1.  Instances are immutable; equality is syntactic equality
    of canonical forms.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=_POLY_ONE, _canonical=False):
        if not _canonical:
            num, den = _canonicalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_fraction(x):
        x = Fraction(x)
        if not x:
            return ZERO
        return Scalar((x,), _POLY_ONE, _canonical=True)

    @staticmethod
    def v_power(e):
        """The Laurent monomial v**e, e any integer."""
        if e >= 0:
            return Scalar((_F0,) * e + (_F1,), _POLY_ONE, _canonical=True)
        return Scalar(_POLY_ONE, (_F0,) * (-e) + (_F1,), _canonical=True)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == _POLY_ONE and self.den == _POLY_ONE

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a:
            return other
        if not c:
            return self
        kb, kd = _vpower_exp(b), _vpower_exp(d)
        if kb is not None and kd is not None:
            # common denominator v**max(kb, kd); re-reduce by the low order
            k = max(kb, kd)
            num = _padd(
                a if k == kb else (_F0,) * (k - kb) + tuple(a),
                c if k == kd else (_F0,) * (k - kd) + tuple(c),
            )
            if not num:
                return ZERO
            low = _low_order(num)
            m = min(k, low)
            if m:
                num = num[m:]
                k -= m
            den = _POLY_ONE if k == 0 else (_F0,) * k + (_F1,)
            return Scalar(num, den, _canonical=True)
        if b == d:
            num = _padd(a, c)
            if not num:
                return ZERO
            g = _pgcd(num, b)
            if g != _POLY_ONE:
                num, _ = _pdivmod(num, g)
                b, _ = _pdivmod(b, g)
            return Scalar(num, b)
        g = _pgcd(b, d)
        if g == _POLY_ONE:
            return Scalar(_padd(_pmul(a, d), _pmul(c, b)), _pmul(b, d))
        b1, _ = _pdivmod(b, g)
        d1, _ = _pdivmod(d, g)
        num = _padd(_pmul(a, d1), _pmul(c, b1))
        if not num:
            return ZERO
        g2 = _pgcd(num, g)
        if g2 != _POLY_ONE:
            num, _ = _pdivmod(num, g2)
            g, _ = _pdivmod(g, g2)
        return Scalar(num, _pmul(_pmul(b1, d1), g))

    def __neg__(self):
        if not self.num:
            return self
        return Scalar(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return ZERO
        # fast path: both denominators are powers of v (the dominant case)
        kb, kd = _vpower_exp(b), _vpower_exp(d)
        if kb is not None and kd is not None:
            num = _pmul(a, c)
            k = kb + kd
            if k == 0:
                return Scalar(num, _POLY_ONE, _canonical=True)
            low = _low_order(num)
            m = min(k, low)
            if m:
                num = num[m:]
                k -= m
            den = _POLY_ONE if k == 0 else (_F0,) * k + (_F1,)
            return Scalar(num, den, _canonical=True)
        g1 = _pgcd(a, d)
        if g1 != _POLY_ONE:
            a, _ = _pdivmod(a, g1)
            d, _ = _pdivmod(d, g1)
        g2 = _pgcd(c, b)
        if g2 != _POLY_ONE:
            c, _ = _pdivmod(c, g2)
            b, _ = _pdivmod(b, g2)
        num, den = _pmul(a, c), _pmul(b, d)
        lc = den[-1]
        if lc != 1:
            num = tuple(x / lc for x in num)
            den = tuple(x / lc for x in den)
        return Scalar(num, den, _canonical=True)

    def inverse(self):
        if not self.num:
            raise ScalarError("division by zero scalar")
        num, den = self.den, self.num
        lc = den[-1]
        if lc != 1:
            num = tuple(x / lc for x in num)
            den = tuple(x / lc for x in den)
        return Scalar(num, den, _canonical=True)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e):
        if e == 0:
            return ONE
        base = self if e > 0 else self.inverse()
        out = base
        for _ in range(abs(e) - 1):
            out = out * base
        return out

    # -- structure ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def key(self):
        return (self.num, self.den)

    def specialize(self, v0):
        """Exact value at v = v0 (a nonzero rational); PoleError at poles."""
        v0 = Fraction(v0)
        if not v0:
            raise ScalarError("specialization at v = 0 is not defined")
        d = _peval(self.den, v0)
        if not d:
            raise PoleError(
                "pole at v = %s: denominator %s vanishes" % (v0, _poly_str(self.den))
            )
        return _peval(self.num, v0) / d

    def subs_v_inverse(self):
        """The image under the field automorphism v -> 1/v."""
        a, b = self.num, self.den
        if not a:
            return self
        da, db = len(a) - 1, len(b) - 1
        ra, rb = tuple(reversed(a)), tuple(reversed(b))
        res = Scalar(ra, rb)
        shift = db - da
        return res * Scalar.v_power(shift) if shift else res

    def __repr__(self):
        if not self.num:
            return "Scalar(0)"
        s = _poly_str(self.num)
        if self.den != _POLY_ONE:
            s = "(%s)/(%s)" % (s, _poly_str(self.den))
        return "Scalar(%s)" % s


def _canonicalize(num, den):
    num, den = _trim(num), _trim(den)
    if not den:
        raise ScalarError("zero denominator")
    if not num:
        return (), _POLY_ONE
    g = _pgcd(num, den)
    if g != _POLY_ONE:
        num, _ = _pdivmod(num, g)
        den, _ = _pdivmod(den, g)
    lc = den[-1]
    if lc != 1:
        num = tuple(c / lc for c in num)
        den = tuple(c / lc for c in den)
    return num, den


def _poly_str(a):
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append("v" if c == 1 else "-v" if c == -1 else "%s*v" % c)
        else:
            parts.append(
                "v^%d" % i if c == 1 else "-v^%d" % i if c == -1 else "%s*v^%d" % (c, i)
            )
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


ZERO = Scalar((), _POLY_ONE, _canonical=True)
ONE = Scalar(_POLY_ONE, _POLY_ONE, _canonical=True)
MINUS_ONE = Scalar((Fraction(-1),), _POLY_ONE, _canonical=True)


def integer(n):
    return Scalar.from_fraction(n)


class PowerBasis:
    """Realization q = v**L.

    L must be even so q**(1/2) exists; for the SL_q(N) functional catalog
    L must be divisible by 2N so the N-th root p = q**(1/N) exists.
    """

    __slots__ = ("L",)

    def __init__(self, L=2):
        if L <= 0 or L % 2:
            raise ValueError("PowerBasis exponent L must be a positive even integer")
        self.L = L

    def q(self, e=1):
        """q**e for integer e."""
        return Scalar.v_power(e * self.L)

    def q_half(self, e=1):
        """q**(e/2) for integer e."""
        return Scalar.v_power(e * self.L // 2)

    def q_frac(self, num, den):
        """q**(num/den); den must divide L."""
        if (self.L * num) % den:
            raise ScalarError(
                "q^(%d/%d) does not exist for q = v^%d" % (num, den, self.L)
            )
        return Scalar.v_power(self.L * num // den)

    def p(self, N, e=1):
        """p**e where p = q**(1/N); requires N | L."""
        if self.L % N:
            raise ScalarError("no N-th root of q: %d does not divide L = %d" % (N, self.L))
        return Scalar.v_power(e * self.L // N)

    def lam(self):
        """lambda = q - q^{-1}."""
        return self.q(1) - self.q(-1)

    def lam_plus(self):
        """lambda_+ = q + q^{-1}."""
        return self.q(1) + self.q(-1)

    # -- rendering ----------------------------------------------------------

    def render(self, s):
        """Render a scalar in q-notation (exponents as fractions of L)."""
        if not isinstance(s, Scalar):
            raise TypeError("expected Scalar")
        if s.is_zero():
            return "0"
        for cand, name in ((self.lam(), "lam"), (self.lam_plus(), "lam+")):
            if s == cand:
                return name
            if s == -cand:
                return "-" + name
        num_s, ok_n = self._laurent_str(s.num, 0)
        if s.den == _POLY_ONE:
            return num_s if ok_n else "(%s)" % num_s
        sh, core = _v_split(s.den)
        if core == _POLY_ONE:
            # denominator is a pure power of v: fold into the numerator
            num_s, ok_n = self._laurent_str(s.num, -sh)
            return num_s if ok_n else "(%s)" % num_s
        den_s, _ = self._laurent_str(s.den, 0)
        return "(%s)/(%s)" % (num_s, den_s)

    def _laurent_str(self, poly, shift):
        sh, core = _v_split(poly)
        shift += sh
        parts = []
        for i in range(len(core) - 1, -1, -1):
            c = core[i]
            if not c:
                continue
            e = Fraction(i + shift, self.L)
            parts.append(_q_term(c, e))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out, len(parts) == 1

    def parse(self, text):
        """Parse a scalar expression (q, q^(a/b), v, lam, integers, + - * / ^)."""
        from .freealg import parse_expression

        poly = parse_expression(text, None, self)
        return poly  # degree-0 parse returns a Scalar


def _v_split(poly):
    """Split off the leading v-power: poly = v**k * core, core(0) != 0."""
    k = 0
    while k < len(poly) and not poly[k]:
        k += 1
    return k, _trim(poly[k:])


def _q_term(c, e):
    if e == 0:
        return str(c)
    if e == 1:
        pw = "q"
    elif e.denominator == 1:
        pw = "q^%d" % e
    else:
        pw = "q^(%s)" % e
    if c == 1:
        return pw
    if c == -1:
        return "-" + pw
    return "%s*%s" % (c, pw)
