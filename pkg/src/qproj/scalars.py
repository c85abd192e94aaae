"""Exact arithmetic in the coefficient field Q(t) with t an N-th root of q.

Every scalar in the package is a ratio of Laurent polynomials in t = q^(1/N)
with rational coefficients, kept in a canonical form so that equality is a
structural comparison:

  * numerator and denominator share no polynomial factor,
  * the denominator has lowest exponent 0 and lowest coefficient 1,
  * zero is (0, (), (1,)).

The root order N is fixed per computation; mixing scalars with different
root orders raises ScalarError.
"""

from fractions import Fraction
import re

__all__ = ["ScalarError", "QScalar", "parse_scalar"]


class ScalarError(ArithmeticError):
    pass


# ----------------------------------------------------------------------
# polynomial helpers: a poly is a tuple of Fractions, index = exponent of t,
# trimmed so that p[-1] != 0 (zero poly is the empty tuple).

_ZERO = Fraction(0)
_ONE = Fraction(1)
_ONE_POLY = (Fraction(1),)


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


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
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return _trim(out)


def _pdivmod(a, b):
    if not b:
        raise ScalarError("polynomial division by zero")
    a = list(a)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, cb in enumerate(b):
                a[i + j] -= c * cb
    return _trim(q), _trim(a)


def _to_int_poly(a):
    from math import lcm
    m = lcm(*(c.denominator for c in a)) if a else 1
    out = [int(c * m) for c in a]
    from math import gcd
    g = 0
    for c in out:
        g = gcd(g, c)
    if g > 1:
        out = [c // g for c in out]
    return out


def _int_content(a):
    from math import gcd
    g = 0
    for c in a:
        g = gcd(g, c)
    return g or 1


def _pgcd(a, b):
    """Monic gcd in Q[t] via a primitive pseudo-remainder sequence over Z
    (avoids the coefficient blowup of plain Euclid with rationals)."""
    if not a or not b:
        return ()
    fa, fb = _to_int_poly(a), _to_int_poly(b)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        # pseudo-division: lc(fb)^(deg difference + 1) * fa mod fb
        r = list(fa)
        lb = fb[-1]
        db = len(fb) - 1
        while len(r) >= len(fb):
            k = len(r) - len(fb)
            lr = r[-1]
            if lr:
                r = [c * lb for c in r]
                for i, c in enumerate(fb):
                    r[i + k] -= lr * c
            # trim
            n = len(r) - 1
            while n >= 0 and not r[n]:
                n -= 1
            r = r[:n + 1]
            if not r:
                break
        g = _int_content(r)
        if g > 1:
            r = [c // g for c in r]
        fa, fb = fb, r
    if len(fa) == 1:
        return (_ONE,)
    inv = Fraction(1, fa[-1])
    return tuple(Fraction(c) * inv for c in fa)


def _lowest(p):
    for i, c in enumerate(p):
        if c:
            return i
    raise ScalarError("zero polynomial has no lowest term")


class QScalar:
    """Element of Q(t), t = q^(1/root); value = t**shift * num(t)/den(t)."""

    __slots__ = ("shift", "num", "den", "root")

    def __init__(self, shift, num, den, root, _canon=False):
        if _canon:
            self.shift, self.num, self.den, self.root = shift, num, den, root
            return
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ScalarError("denominator is zero")
        if not num:
            self.shift, self.num, self.den, self.root = 0, (), (_ONE,), root
            return
        lo = _lowest(num)
        if lo:
            shift += lo
            num = num[lo:]
        lo = _lowest(den)
        if lo:
            shift -= lo
            den = den[lo:]
        if len(num) > 1 and len(den) > 1:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
        c = den[0]
        if c != 1:
            inv = 1 / c
            num = tuple(x * inv for x in num)
            den = tuple(x * inv for x in den)
        self.shift, self.num, self.den, self.root = shift, num, den, root

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, root):
        return cls(0, (), (_ONE,), root, _canon=True)

    @classmethod
    def one(cls, root):
        return cls(0, (_ONE,), (_ONE,), root, _canon=True)

    @classmethod
    def from_rational(cls, c, root):
        c = Fraction(c)
        if not c:
            return cls.zero(root)
        return cls(0, (c,), (_ONE,), root, _canon=True)

    @classmethod
    def t_pow(cls, k, root):
        """t**k, i.e. q^(k/root)."""
        return cls(k, (_ONE,), (_ONE,), root, _canon=True)

    @classmethod
    def q_pow(cls, k, root):
        return cls.t_pow(k * root, root)

    @classmethod
    def nu(cls, root):
        """nu = q - q^(-1)."""
        return cls.q_pow(1, root) - cls.q_pow(-1, root)

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.shift == 0 and self.num == (_ONE,) and self.den == (_ONE,)

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, QScalar):
            other = QScalar.from_rational(other, self.root)
        elif other.root != self.root:
            raise ScalarError(
                "root order mismatch: %d vs %d" % (self.root, other.root))
        return other

    def __add__(self, other):
        other = self._check(other)
        if not self.num:
            return other
        if not other.num:
            return self
        m = min(self.shift, other.shift)
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            a = self.num
            if self.shift > m:
                a = (_ZERO,) * (self.shift - m) + a
            b = other.num
            if other.shift > m:
                b = (_ZERO,) * (other.shift - m) + b
            s = _padd(a, b)
            if not s:
                return QScalar.zero(self.root)
            lo = _lowest(s)
            return QScalar(m + lo, s[lo:], _ONE_POLY, self.root, _canon=True)
        a = _pmul(self.num, other.den)
        if self.shift > m:
            a = (_ZERO,) * (self.shift - m) + a
        b = _pmul(other.num, self.den)
        if other.shift > m:
            b = (_ZERO,) * (other.shift - m) + b
        return QScalar(m, _padd(a, b), _pmul(self.den, other.den), self.root)

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        return QScalar(self.shift, _pneg(self.num), self.den, self.root,
                       _canon=True)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if not self.num or not other.num:
            return QScalar.zero(self.root)
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            return QScalar(self.shift + other.shift,
                           _pmul(self.num, other.num), _ONE_POLY, self.root,
                           _canon=True)
        return QScalar(self.shift + other.shift,
                       _pmul(self.num, other.num),
                       _pmul(self.den, other.den), self.root)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ScalarError("division by zero")
        return QScalar(-self.shift, self.den, self.num, self.root)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, k):
        if k == 0:
            return QScalar.one(self.root)
        if k < 0:
            return self.inverse() ** (-k)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    # -- equality ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QScalar.from_rational(other, self.root)
        if not isinstance(other, QScalar):
            return NotImplemented
        return (self.root == other.root and self.shift == other.shift
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.shift, self.num, self.den))

    # -- evaluation ----------------------------------------------------------

    def eval_at(self, q0):
        """Evaluate exactly at q = q0 (a positive rational).

        If q0 has a rational root of order `root`, substitute t directly;
        otherwise reduce modulo t**root - q0 and require the residue to be
        constant.  A vanishing denominator raises ScalarError.
        """
        q0 = Fraction(q0)
        if q0 <= 0:
            raise ScalarError("evaluation point must be positive")
        t0 = _nth_root(q0, self.root)
        if t0 is not None:
            n = _eval_laurent(self.num, self.shift, t0)
            d = _eval_laurent(self.den, 0, t0)
            if d == 0:
                raise ScalarError("pole at q0 = %s" % q0)
            return n / d
        n = _residue_constant(self.num, self.shift, self.root, q0)
        d = _residue_constant(self.den, 0, self.root, q0)
        if d == 0:
            raise ScalarError("pole at q0 = %s" % q0)
        return n / d

    # -- printing / parsing ----------------------------------------------------

    def __str__(self):
        if not self.num:
            return "0"
        if self.den == (_ONE,):
            return _laurent_str(self.num, self.shift, self.root)
        return "(%s)/(%s)" % (_laurent_str(self.num, self.shift, self.root),
                              _laurent_str(self.den, 0, self.root))

    __repr__ = __str__


def _nth_root(x, n):
    """Rational n-th root of a positive Fraction, or None."""
    def iroot(m):
        if m < 2:
            return m
        r = round(m ** (1.0 / n))
        for c in (r - 1, r, r + 1):
            if c >= 0 and c ** n == m:
                return c
        return None
    a = iroot(x.numerator)
    b = iroot(x.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def _eval_laurent(coeffs, shift, t0):
    acc = _ZERO
    for k, c in enumerate(coeffs):
        if c:
            acc += c * t0 ** (k + shift)
    return acc


def _residue_constant(coeffs, shift, root, q0):
    res = {}
    for k, c in enumerate(coeffs):
        if not c:
            continue
        e = k + shift
        m, r = divmod(e, root)
        res[r] = res.get(r, _ZERO) + c * q0 ** m
    for r, c in res.items():
        if r != 0 and c:
            raise ScalarError(
                "value involves an irrational root of %s" % q0)
    return res.get(0, _ZERO)


def _frac_str(c):
    return str(c)


def _laurent_str(coeffs, shift, root):
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        e = Fraction(k + shift, root)
        if e == 0:
            parts.append(_frac_str(c))
        else:
            if e.denominator == 1 and e >= 0:
                p = "q^%d" % e if e != 1 else "q"
            else:
                p = "q^(%s)" % e
            if c == 1:
                parts.append(p)
            elif c == -1:
                parts.append("-" + p)
            else:
                parts.append("%s*%s" % (_frac_str(c), p))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[q^()*/+-])")


def _tokenize(s):
    toks = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ScalarError("bad scalar syntax at %r" % s[pos:])
        toks.append(m.group(1))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, toks, root):
        self.toks = toks
        self.i = 0
        self.root = root

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, t):
        got = self.next()
        if got != t:
            raise ScalarError("expected %r, got %r" % (t, got))

    def parse(self):
        # either "(poly)/(poly)" or a plain Laurent polynomial
        save = self.i
        if self.peek() == "(":
            try:
                num = self.parse_group()
                if self.peek() == "/":
                    self.next()
                    den = self.parse_group()
                    if self.peek() is not None:
                        raise ScalarError("trailing input")
                    return num / den
            except ScalarError:
                pass
            self.i = save
        val = self.parse_poly()
        if self.peek() is not None:
            raise ScalarError("trailing input in scalar")
        return val

    def parse_group(self):
        self.expect("(")
        v = self.parse_poly()
        self.expect(")")
        return v

    def parse_poly(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.next() == "-" else 1
        acc = self.parse_term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.next() == "-" else 1
            acc = acc + self.parse_term() * sign
        return acc

    def parse_term(self):
        t = self.peek()
        if t == "q":
            return self.parse_qpow()
        c = Fraction(self.next())
        if self.peek() == "/":
            self.next()
            c = c / Fraction(self.next())
        coef = QScalar.from_rational(c, self.root)
        if self.peek() == "*":
            self.next()
            return coef * self.parse_qpow()
        return coef

    def parse_qpow(self):
        self.expect("q")
        if self.peek() != "^":
            return QScalar.q_pow(1, self.root)
        self.next()
        if self.peek() == "(":
            self.next()
            e = self.parse_signed_frac()
            self.expect(")")
        else:
            e = self.parse_signed_frac()
        te = e * self.root
        if te.denominator != 1:
            raise ScalarError("exponent %s not in (1/%d)Z" % (e, self.root))
        return QScalar.t_pow(te.numerator, self.root)

    def parse_signed_frac(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.next() == "-" else 1
        e = Fraction(self.next())
        if self.peek() == "/":
            self.next()
            e = e / Fraction(self.next())
        return sign * e


def parse_scalar(s, root):
    """Inverse of str(QScalar); accepts `c*q^(a/N)` sums and `(.)/(.)`."""
    return _Parser(_tokenize(s), root).parse()
