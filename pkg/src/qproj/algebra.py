"""Noncommutative polynomials in the matrix generators of the two quantized
coordinate rings used here: the special unitary one (tag "G", size N) and the
unitary one of one size down (tag "H", size N-1, with the extra inverse
determinant generator D).

Generators are encoded as index pairs (i, j), 1-based; D is (0, 0) and only
allowed under tag "H".  A word is a tuple of generators, the empty word is
the unit.  NCPoly maps words to QScalar coefficients in Q(q^(1/N)).

The Hopf operations (counit, coproduct, antipode, star) are defined on
generators and extended structurally.  Antipodes are expanded eagerly via
the cofactor formula, so S never appears as a symbol.
"""

from fractions import Fraction
from itertools import permutations

from .scalars import QScalar, ScalarError, parse_scalar

__all__ = [
    "Algebra", "NCPoly", "TensorPoly", "D",
    "quantum_determinant", "counit", "coproduct", "antipode", "star",
    "plus_part", "parse_poly",
]

D = (0, 0)


def _inversions(perm):
    n = len(perm)
    return sum(1 for a in range(n) for b in range(a + 1, n)
               if perm[a] > perm[b])


class Algebra:
    """Descriptor for one of the two algebras: tag "G" or "H", matrix size,
    and the root order N of the shared coefficient field."""

    def __init__(self, tag, size, root):
        if tag not in ("G", "H"):
            raise ValueError("tag must be G or H")
        self.tag = tag
        self.size = size
        self.root = root

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.tag == other.tag
                and self.size == other.size and self.root == other.root)

    def __hash__(self):
        return hash((self.tag, self.size, self.root))

    def __repr__(self):
        return "Algebra(%s, size=%d, root=%d)" % (self.tag, self.size, self.root)

    # -- symbols ------------------------------------------------------------

    def gens(self):
        out = [(i, j) for i in range(1, self.size + 1)
               for j in range(1, self.size + 1)]
        if self.tag == "H":
            out.append(D)
        return out

    def check_symbol(self, s):
        if s == D:
            if self.tag != "H":
                raise ValueError("D only lives in the H algebra")
            return
        i, j = s
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise ValueError("generator index out of range: %r" % (s,))

    def rank(self, s):
        # row-major, D largest
        if s == D:
            return self.size * self.size
        return (s[0] - 1) * self.size + (s[1] - 1)

    # -- scalar shortcuts ------------------------------------------------------

    def scalar(self, c):
        return QScalar.from_rational(c, self.root)

    def q(self, k=1):
        return QScalar.q_pow(k, self.root)

    def t(self, k=1):
        return QScalar.t_pow(k, self.root)

    def nu(self):
        return QScalar.nu(self.root)

    # -- polynomial constructors ----------------------------------------------

    def zero(self):
        return NCPoly(self, {})

    def one(self):
        return NCPoly(self, {(): QScalar.one(self.root)})

    def gen(self, i, j=None):
        s = D if i == "D" else (i, j)
        self.check_symbol(s)
        return NCPoly(self, {(s,): QScalar.one(self.root)})

    def word(self, *syms):
        for s in syms:
            self.check_symbol(s)
        return NCPoly(self, {tuple(syms): QScalar.one(self.root)})


def _sym_str(s):
    return "D" if s == D else "u[%d,%d]" % s


class NCPoly:
    """Sparse noncommutative polynomial: word tuple -> QScalar, no zeros."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = {w: c for w, c in terms.items() if c}

    # -- ring ops ----------------------------------------------------------

    def _compat(self, other):
        if self.alg != other.alg:
            raise ValueError("algebra tag mismatch in polynomial operation")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.alg.one() * self.alg.scalar(other)
        self._compat(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            out[w] = c if s is None else s + c
        return NCPoly(self.alg, out)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.alg.one() * self.alg.scalar(other)
        return self + (-other)

    def __neg__(self):
        return NCPoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (QScalar, int, Fraction)):
            c = other if isinstance(other, QScalar) else self.alg.scalar(other)
            if not c:
                return self.alg.zero()
            return NCPoly(self.alg, {w: v * c for w, v in self.terms.items()})
        self._compat(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                out[w] = c if s is None else s + c
        return NCPoly(self.alg, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.alg == other.alg and self.terms == other.terms

    def __hash__(self):
        return hash((self.alg, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: _word_key(self.alg, t[0]))

    def map_coeffs(self, f):
        return NCPoly(self.alg, {w: f(c) for w, c in self.terms.items()})

    # -- printing -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            ws = ".".join(_sym_str(s) for s in w) if w else "1"
            if c.is_one() and w:
                parts.append(ws)
            elif w:
                parts.append("(%s)*%s" % (c, ws))
            else:
                parts.append("(%s)*1" % c)
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return [{"word": [("D" if s == D else list(s)) for s in w],
                 "coefficient": str(c)}
                for w, c in self.sorted_terms()]


def _word_key(alg, w):
    return (len(w), tuple(alg.rank(s) for s in w))


def word_key(alg, w):
    """Degree-lex key: row-major generator order, D largest."""
    return _word_key(alg, w)


# ----------------------------------------------------------------------
# Hopf structure


def counit(f):
    """epsilon: u[i,j] -> delta_ij, D -> 1, extended multiplicatively."""
    root = f.alg.root
    acc = QScalar.zero(root)
    for w, c in f.terms.items():
        if all(s == D or s[0] == s[1] for s in w):
            acc = acc + c
    return acc


def _eps_word(w):
    return all(s == D or s[0] == s[1] for s in w)


def plus_part(f):
    """f - epsilon(f) 1."""
    return f - f.alg.one() * counit(f)


def quantum_determinant(alg):
    """Sum over permutations of (-q)^length u^1_pi(1) ... u^n_pi(n)."""
    n = alg.size
    terms = {}
    mq = -alg.q()
    for perm in permutations(range(1, n + 1)):
        w = tuple((r, perm[r - 1]) for r in range(1, n + 1))
        terms[w] = mq ** _inversions(perm)
    return NCPoly(alg, terms)


def _antipode_gen(alg, s):
    """S on a single generator, fully expanded.

    S(u^i_j) = (-q)^(i-j) sum_pi (-q)^l(pi) u^{k_1}_{l_pi(1)} ... times D
    for tag H (times nothing for tag G, where det = 1); S(D) = det.
    """
    if s == D:
        return quantum_determinant(alg)
    i, j = s
    n = alg.size
    rows = [r for r in range(1, n + 1) if r != j]
    cols = [c for c in range(1, n + 1) if c != i]
    mq = -alg.q()
    sign = mq ** (i - j) if i >= j else (mq ** (j - i)).inverse()
    tail = (D,) if alg.tag == "H" else ()
    terms = {}
    for perm in permutations(range(n - 1)):
        w = tuple((rows[a], cols[perm[a]]) for a in range(n - 1)) + tail
        terms[w] = sign * mq ** _inversions(perm)
    return NCPoly(alg, terms)


def antipode(f):
    alg = f.alg
    cache = {}
    out = alg.zero()
    for w, c in f.terms.items():
        acc = alg.one() * c
        for s in reversed(w):
            g = cache.get(s)
            if g is None:
                g = cache[s] = _antipode_gen(alg, s)
            acc = acc * g
        out = out + acc
    return out


def star(f):
    """Conjugate-linear anti-multiplicative involution; (u^i_j)* = S(u^j_i),
    D* = det.  Coefficients are real rational functions of real q, so they
    are fixed."""
    alg = f.alg
    cache = {}
    out = alg.zero()
    for w, c in f.terms.items():
        acc = alg.one() * c
        for s in reversed(w):
            g = cache.get(s)
            if g is None:
                t = s if s == D else (s[1], s[0])
                g = cache[s] = _antipode_gen(alg, t)
            acc = acc * g
        out = out + acc
    return out


class TensorPoly:
    """Multi-leg tensor of noncommutative polynomials over a common field;
    keys are tuples of words, one per leg."""

    __slots__ = ("legs", "terms")

    def __init__(self, legs, terms):
        self.legs = tuple(legs)
        self.terms = {k: c for k, c in terms.items() if c}

    @classmethod
    def unit(cls, legs):
        root = legs[0].root
        return cls(legs, {tuple(() for _ in legs): QScalar.one(root)})

    def __add__(self, other):
        if self.legs != other.legs:
            raise ValueError("tensor leg mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return TensorPoly(self.legs, out)

    def __neg__(self):
        return TensorPoly(self.legs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (QScalar, int, Fraction)):
            c = (other if isinstance(other, QScalar)
                 else QScalar.from_rational(other, self.legs[0].root))
            return TensorPoly(self.legs,
                              {k: v * c for k, v in self.terms.items()})
        if self.legs != other.legs:
            raise ValueError("tensor leg mismatch")
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                c = c1 * c2
                s = out.get(k)
                out[k] = c if s is None else s + c
        return TensorPoly(self.legs, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.legs == other.legs and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms,
                        key=lambda k: tuple(_word_key(a, w)
                                            for a, w in zip(self.legs, k))):
            ws = " (x) ".join(
                ".".join(_sym_str(s) for s in w) if w else "1" for w in k)
            parts.append("(%s)*[%s]" % (self.terms[k], ws))
        return " + ".join(parts)

    __repr__ = __str__


def _delta_gen(alg, s, k):
    """k-leg iterated coproduct of one generator, as {word-tuple: coeff}."""
    one = QScalar.one(alg.root)
    if s == D:
        return {tuple((D,) for _ in range(k)): one}
    i, j = s
    n = alg.size
    out = {}
    # sum over paths i -> a1 -> ... -> a_{k-1} -> j
    def rec(prefix, cur):
        if len(prefix) == k - 1:
            key = tuple(((a, b),) for a, b in
                        zip((i,) + prefix, prefix + (j,)))
            out[key] = one
            return
        for a in range(1, n + 1):
            rec(prefix + (a,), a)
    rec((), i)
    return out


def coproduct(f, k=2):
    """Iterated coproduct with k legs, extended multiplicatively over words."""
    if k < 2:
        raise ValueError("coproduct needs at least 2 legs")
    alg = f.alg
    legs = tuple(alg for _ in range(k))
    cache = {}
    out = {}
    for w, c in f.terms.items():
        # leg-wise product over the letters of w
        acc = {tuple(() for _ in range(k)): c}
        for s in w:
            ds = cache.get(s)
            if ds is None:
                ds = cache[s] = _delta_gen(alg, s, k)
            nxt = {}
            for k1, c1 in acc.items():
                for k2, c2 in ds.items():
                    key = tuple(a + b for a, b in zip(k1, k2))
                    cc = c1 * c2
                    prev = nxt.get(key)
                    nxt[key] = cc if prev is None else prev + cc
            acc = nxt
        for key, cc in acc.items():
            prev = out.get(key)
            out[key] = cc if prev is None else prev + cc
    return TensorPoly(legs, out)


# ----------------------------------------------------------------------
# text grammar: `u[i,j]`, `D`, `.` juxtaposition, `( ... )*` scalar prefix,
# `+` separated terms; the unit word prints as `1`.

import re as _re

_TERM_RE = _re.compile(r"\s*\+\s*")
_WORD_RE = _re.compile(r"u\[(\d+),(\d+)\]|D|1")


def parse_poly(text, alg):
    out = alg.zero()
    depth = 0
    terms = []
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            terms.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        terms.append("".join(cur))
    for term in terms:
        term = term.strip()
        coeff = QScalar.one(alg.root)
        if term.startswith("("):
            depth = 0
            for pos, ch in enumerate(term):
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                    if depth == 0:
                        break
            coeff = parse_scalar(term[1:pos], alg.root)
            term = term[pos + 1:].strip()
            if not term.startswith("*"):
                raise ValueError("expected '*' after scalar prefix")
            term = term[1:].strip()
        word = []
        for piece in term.split("."):
            piece = piece.strip()
            m = _WORD_RE.fullmatch(piece)
            if not m:
                raise ValueError("bad word piece %r" % piece)
            if piece == "D":
                word.append(D)
            elif piece == "1":
                pass
            else:
                word.append((int(m.group(1)), int(m.group(2))))
        for s in word:
            alg.check_symbol(s)
        out = out + NCPoly(alg, {tuple(word): coeff})
    return out
