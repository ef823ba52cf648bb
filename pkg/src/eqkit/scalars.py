"""Exact arithmetic in the field Q(q) of rational functions in q.

Every equality decision downstream (noncommutative reduction, ideal
membership, Hopf checks) is a structural comparison of these values, so the
canonical form is load-bearing:

* numerator and denominator are ordinary polynomials (minimum exponent 0),
  with the Laurent shift pushed into whichever side needs it;
* the fraction is gcd-reduced over Q[q];
* the denominator has integer coefficients with content 1 and a positive
  leading coefficient.

Polynomials are stored content-factored: a Fraction scale times a primitive
integer coefficient map with positive leading coefficient.  By Gauss's lemma
products of primitive parts stay primitive, so the bulk of the arithmetic
runs on machine integers; rationals appear only in the one content factor.
No floating point appears anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from math import lcm as _int_lcm

from .errors import DivisionByZero, EvaluationPole

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _normalize_int_map(data):
    """Split an integer coefficient map into (content, primitive map)."""
    if not data:
        return _ZERO, {}
    g = 0
    for c in data.values():
        g = _int_gcd(g, c)
    if data[max(data)] < 0:
        g = -g
    return Fraction(g), {e: c // g for e, c in data.items()}


class LaurentPoly:
    """Sparse Laurent polynomial in q with exact rational coefficients.

    Immutable.  `content` is a Fraction (zero only for the zero polynomial);
    `prim` maps exponents to integers with overall gcd 1 and positive leading
    coefficient.  The spec-level coefficient map (exponent -> Fraction) is
    exposed through `coeffs`.
    """

    __slots__ = ("content", "prim", "_key")

    def __init__(self, coeffs=None):
        if not coeffs:
            content, prim = _ZERO, {}
        else:
            fracs = {e: Fraction(c) for e, c in coeffs.items() if c}
            if not fracs:
                content, prim = _ZERO, {}
            else:
                den = _int_lcm(*(c.denominator for c in fracs.values()))
                ints = {e: int(c * den) for e, c in fracs.items()}
                content, prim = _normalize_int_map(ints)
                content /= den
        object.__setattr__(self, "content", content)
        object.__setattr__(self, "prim", prim)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def _raw(cls, content, prim):
        """Trusted constructor: prim primitive with positive leading coeff."""
        self = object.__new__(cls)
        object.__setattr__(self, "content", content)
        object.__setattr__(self, "prim", prim)
        object.__setattr__(self, "_key", None)
        return self

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return _LP_ZERO

    @classmethod
    def one(cls):
        return _LP_ONE

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        if not c:
            return _LP_ZERO
        return cls._raw(c, {0: 1})

    @classmethod
    def qpow(cls, k):
        return cls._raw(_ONE, {k: 1})

    # -- structure ----------------------------------------------------

    @property
    def coeffs(self):
        """Coefficient map exponent -> Fraction (no zero values)."""
        return {e: self.content * c for e, c in self.prim.items()}

    def is_zero(self):
        return not self.prim

    def __bool__(self):
        return bool(self.prim)

    def key(self):
        k = self._key
        if k is None:
            k = (self.content, tuple(sorted(self.prim.items())))
            object.__setattr__(self, "_key", k)
        return k

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.content == other.content
            and self.prim == other.prim
        )

    def __hash__(self):
        return hash(self.key())

    def min_exp(self):
        return min(self.prim)

    def max_exp(self):
        return max(self.prim)

    def is_monomial(self):
        return len(self.prim) == 1

    def leading(self):
        """Coefficient of the highest power of q."""
        return self.content * self.prim[max(self.prim)]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not self.prim:
            return other
        if not other.prim:
            return self
        ca, cb = self.content, other.content
        g = Fraction(
            _int_gcd(ca.numerator, cb.numerator),
            _int_lcm(ca.denominator, cb.denominator),
        )
        fa, fb = int(ca / g), int(cb / g)
        out = {e: fa * c for e, c in self.prim.items()}
        for e, c in other.prim.items():
            s = out.get(e, 0) + fb * c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        content, prim = _normalize_int_map(out)
        return LaurentPoly._raw(content * g, prim)

    def __neg__(self):
        if not self.prim:
            return self
        return LaurentPoly._raw(-self.content, self.prim)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.prim or not other.prim:
            return _LP_ZERO
        out = {}
        for e1, c1 in self.prim.items():
            for e2, c2 in other.prim.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        # product of primitive parts is primitive (Gauss), leading stays positive
        return LaurentPoly._raw(self.content * other.content, out)

    def scaled(self, c):
        c = Fraction(c)
        if not c or not self.prim:
            return _LP_ZERO
        return LaurentPoly._raw(self.content * c, self.prim)

    def shifted(self, k):
        """Multiply by q**k."""
        if k == 0 or not self.prim:
            return self
        return LaurentPoly._raw(self.content, {e + k: c for e, c in self.prim.items()})

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a LaurentPoly; use RationalFunction")
        out = _LP_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def evaluate(self, v):
        """Value at q = v (a Fraction); v must be nonzero if exponents are negative."""
        v = Fraction(v)
        total = _ZERO
        for e, c in self.prim.items():
            if e >= 0:
                total += c * v**e
            else:
                if not v:
                    raise EvaluationPole("q = 0 with negative exponent")
                total += c / v ** (-e)
        return total * self.content

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"


_LP_ZERO = LaurentPoly._raw(_ZERO, {})
_LP_ONE = LaurentPoly._raw(_ONE, {0: 1})


# -- primitive integer polynomial helpers (ordinary polynomials) -------------


def _prim_part(data):
    _, prim = _normalize_int_map(data)
    return prim


def _prem(a, b):
    """Pseudo-remainder of integer maps: lead(b)^k * a mod b."""
    da, db = max(a), max(b)
    lb = b[db]
    rem = dict(a)
    while rem:
        dr = max(rem)
        if dr < db:
            break
        lr = rem[dr]
        # rem <- lb*rem - lr*q^(dr-db)*b
        out = {e: lb * c for e, c in rem.items()}
        for e, c in b.items():
            ee = e + dr - db
            s = out.get(ee, 0) - lr * c
            if s:
                out[ee] = s
            else:
                out.pop(ee, None)
        rem = out
    return rem


def _prim_gcd(a, b):
    """Gcd of primitive integer maps, primitive with positive leading."""
    while b:
        r = _prem(a, b)
        a, b = b, _prim_part(r)
    return a


def _exact_div(a, b):
    """Exact quotient of integer maps (b | a over Q[q], both primitive)."""
    quo = {}
    rem = dict(a)
    db = max(b)
    lb = b[db]
    while rem:
        dr = max(rem)
        if dr < db:
            break
        c, r = divmod(rem[dr], lb)
        if r:
            raise ArithmeticError("inexact division of primitive polynomials")
        k = dr - db
        quo[k] = c
        for e, cb in b.items():
            ee = e + k
            s = rem.get(ee, 0) - c * cb
            if s:
                rem[ee] = s
            else:
                rem.pop(ee, None)
    if rem:
        raise ArithmeticError("inexact division of primitive polynomials")
    return quo


class RationalFunction:
    """Canonical fraction of ordinary polynomials in q; zero is (0, 1).

    The denominator always has content exactly 1 (primitive integer
    coefficients, positive leading coefficient).
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den):
        rf = RationalFunction.make(num, den)
        object.__setattr__(self, "num", rf.num)
        object.__setattr__(self, "den", rf.den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _raw(cls, num, den):
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def make(cls, n, d):
        """Canonicalize the fraction n/d of Laurent polynomials."""
        if d.is_zero():
            raise DivisionByZero("zero denominator")
        if n.is_zero():
            return RF_ZERO
        shift = n.min_exp() - d.min_exp()
        n0 = n.shifted(-n.min_exp())
        d0 = d.shifted(-d.min_exp())
        if shift > 0:
            n0 = n0.shifted(shift)
        elif shift < 0:
            d0 = d0.shifted(-shift)
        if d0.is_monomial():
            e = d0.max_exp()
            num = n0.scaled(1 / d0.content)
            den = _LP_ONE if e == 0 else LaurentPoly._raw(_ONE, {e: 1})
            return cls._raw(num, den)
        g = _prim_gcd(dict(n0.prim), dict(d0.prim))
        if len(g) > 1 or g.get(0) != 1:
            pn = _exact_div(dict(n0.prim), g)
            pd = _exact_div(dict(d0.prim), g)
        else:
            pn, pd = n0.prim, d0.prim
        num = LaurentPoly._raw(n0.content / d0.content, pn)
        den = LaurentPoly._raw(_ONE, pd)
        return cls._raw(num, den)

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_one(self):
        return self.num == _LP_ONE and self.den == _LP_ONE

    def is_laurent(self):
        """True when the denominator is a pure power of q."""
        return self.den.is_monomial()

    def key(self):
        return (self.num.key(), self.den.key())

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.key())
            object.__setattr__(self, "_hash", h)
        return h

    # -- field operations ----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction.make(self.num + other.num, self.den)
        return RationalFunction.make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        if self.num.is_zero():
            return self
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        if self.den is _LP_ONE and other.den is _LP_ONE:
            return RationalFunction._raw(self.num * other.num, _LP_ONE)
        return RationalFunction.make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return RationalFunction.make(self.den, self.num)

    def __truediv__(self, other):
        return self * _coerce(other).inv()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inv()

    def __pow__(self, k):
        if k == 0:
            return RF_ONE
        if k < 0:
            return self.inv() ** (-k)
        out = RF_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def eval_at(self, v):
        """Value at q = v; raises EvaluationPole at q = 0 or a zero of den."""
        v = Fraction(v)
        if not v:
            raise EvaluationPole("q = 0")
        dv = self.den.evaluate(v)
        if not dv:
            raise EvaluationPole(f"pole at q = {v}")
        return self.num.evaluate(v) / dv

    # -- rendering ------------------------------------------------------

    def is_negative(self):
        """Sign of the leading numerator coefficient (denominator is positive)."""
        if self.num.is_zero():
            return False
        return self.num.leading() < 0

    def render(self):
        if self.is_negative():
            return "-" + (-self).render_factor()
        return self.render_factor()

    def render_factor(self):
        """Grammar-compatible string usable as a factor in a product."""
        if self.num.is_zero():
            return "0"
        num, den = self.num, self.den
        if den.is_monomial():
            k = den.max_exp()
            if num.is_monomial():
                e = num.max_exp()
                return _term_str(num.leading(), e - k)
            body = _poly_str(num)
            return f"({body})" if k == 0 else f"({body})*{_qpow_str(-k)}"
        den_part = f"({_poly_str(den)})^-1"
        if num == _LP_ONE:
            return den_part
        if num.is_monomial():
            e = num.max_exp()
            return f"{_term_str(num.leading(), e)}*{den_part}"
        return f"({_poly_str(num)})*{den_part}"

    __str__ = render

    def __repr__(self):
        return f"<Q(q): {self.render()}>"


def _qpow_str(e):
    return "q" if e == 1 else f"q^{e}"


def _term_str(c, e):
    if e == 0:
        return str(c)
    if c == 1:
        return _qpow_str(e)
    if c == -1:
        return f"-{_qpow_str(e)}"
    return f"{c}*{_qpow_str(e)}"


def _poly_str(p):
    coeffs = p.coeffs
    parts = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        body = _term_str(abs(c), e)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return rf_const(x)
    raise TypeError(f"cannot coerce {x!r} into Q(q)")


RF_ZERO = RationalFunction._raw(_LP_ZERO, _LP_ONE)
RF_ONE = RationalFunction._raw(_LP_ONE, _LP_ONE)
RF_Q = RationalFunction._raw(LaurentPoly.qpow(1), _LP_ONE)

_CONST_CACHE = {0: RF_ZERO, 1: RF_ONE}


def rf_const(c):
    """The constant c as an element of Q(q)."""
    c = Fraction(c)
    cached = _CONST_CACHE.get(c)
    if cached is not None:
        return cached
    out = RationalFunction._raw(LaurentPoly.const(c), _LP_ONE)
    if c.denominator == 1 and -64 <= c <= 64:
        _CONST_CACHE[c] = out
    return out


_QPOW_CACHE = {0: RF_ONE, 1: RF_Q}


def rf_qpow(k):
    """q**k as an element of Q(q) (k may be negative)."""
    cached = _QPOW_CACHE.get(k)
    if cached is not None:
        return cached
    if k >= 0:
        out = RationalFunction._raw(LaurentPoly.qpow(k), _LP_ONE)
    else:
        out = RationalFunction._raw(_LP_ONE, LaurentPoly.qpow(-k))
    if -256 <= k <= 256:
        _QPOW_CACHE[k] = out
    return out
