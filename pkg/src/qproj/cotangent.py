"""Cotangent spaces of the two calculi in play.

The left-invariant one-form space of the total calculus has the basis
{e+_1..e+_{N-1}, e0, e-_1..e-_{N-1}} with representatives u^{i+1}_1,
u^1_1 - 1 and u^1_{i+1}.  The projected-space cotangent space embeds as the
span of the e+/e- vectors.

Two evaluators compute cosets: an ideal-driven quotient model (exact
elimination against the right ideal up to a degree bound, the ground
truth) and a table-driven fold using the identity

    coset((x w)+) = coset(x+) <| w  +  eps(x) coset(w+),

which is exact in every degree once the one-letter table is known.
"""

from fractions import Fraction

from .scalars import QScalar
from .algebra import (NCPoly, TensorPoly, D, antipode, star, counit,
                      plus_part, coproduct, word_key, _eps_word)
from .linalg import rref, Echelon

__all__ = [
    "CosetError", "CotangentVector", "esym_str",
    "MPoly", "zgen", "QuotientModel", "ActionTable",
    "alpha_n", "alpha_poly", "is_coinvariant",
    "woronowicz_ideal_su2",
]


class CosetError(RuntimeError):
    pass


# -- basis symbols -------------------------------------------------------
# ('+', i) / ('0',) / ('-', i), i = 1..N-1

def esyms(n):
    out = [("+", i) for i in range(1, n)]
    out.append(("0",))
    out.extend(("-", i) for i in range(1, n))
    return out


def esym_str(s):
    if s == ("0",):
        return "e0"
    return "e%s[%d]" % (s[0], s[1])


def vsyms(n):
    return [s for s in esyms(n) if s != ("0",)]


class CotangentVector:
    """Coordinates over the e-basis; dimension 2N-1."""

    __slots__ = ("root", "coords")

    def __init__(self, root, coords=None):
        self.root = root
        self.coords = {s: c for s, c in (coords or {}).items() if c}

    def __add__(self, other):
        out = dict(self.coords)
        for s, c in other.coords.items():
            p = out.get(s)
            out[s] = c if p is None else p + c
        return CotangentVector(self.root, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CotangentVector(self.root,
                               {s: -c for s, c in self.coords.items()})

    def __mul__(self, c):
        if not isinstance(c, QScalar):
            c = QScalar.from_rational(c, self.root)
        return CotangentVector(self.root,
                               {s: v * c for s, v in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, CotangentVector)
                and self.coords == other.coords)

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def is_zero(self):
        return not self.coords

    def __bool__(self):
        return bool(self.coords)

    def get(self, s):
        c = self.coords.get(s)
        return c if c is not None else QScalar.zero(self.root)

    def has_e0(self):
        return ("0",) in self.coords

    def project(self, sign):
        """Keep only e+ (sign '+') or e- (sign '-') coordinates."""
        return CotangentVector(
            self.root, {s: c for s, c in self.coords.items() if s[0] == sign})

    def __str__(self):
        if not self.coords:
            return "0"
        parts = []
        for s in sorted(self.coords, key=_esym_key):
            c = self.coords[s]
            parts.append(esym_str(s) if c.is_one()
                         else "(%s)*%s" % (c, esym_str(s)))
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return {esym_str(s): str(c)
                for s, c in sorted(self.coords.items(), key=lambda t:
                                   _esym_key(t[0]))}


def _esym_key(s):
    order = {"+": 0, "0": 1, "-": 2}
    return (order[s[0]], s[1] if len(s) > 1 else 0)


# -- polynomials on the projected space -------------------------------------
# words over z-letters (i, j), z_ij = u^i_1 S(u^1_j)


class MPoly:
    """Polynomial in the z generators of the projected-space subalgebra.

    Kept in the z-letter presentation so that the coproduct can be taken
    structurally: Delta(z_ij) = sum_{a,b} u^i_a S(u^b_j) (x) z_ab, which
    keeps the rightmost leg inside the subalgebra.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg  # the G algebra
        self.terms = {w: c for w, c in terms.items() if c}

    @classmethod
    def one(cls, alg):
        return cls(alg, {(): QScalar.one(alg.root)})

    @classmethod
    def zero(cls, alg):
        return cls(alg, {})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            p = out.get(w)
            out[w] = c if p is None else p + c
        return MPoly(self.alg, out)

    def __neg__(self):
        return MPoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (QScalar, int, Fraction)):
            c = (other if isinstance(other, QScalar)
                 else self.alg.scalar(other))
            return MPoly(self.alg, {w: v * c for w, v in self.terms.items()})
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                p = out.get(w)
                out[w] = c if p is None else p + c
        return MPoly(self.alg, out)

    __rmul__ = __mul__

    def is_zero(self):
        return not self.terms

    def eps(self):
        acc = QScalar.zero(self.alg.root)
        for w, c in self.terms.items():
            if all(i == 1 and j == 1 for (i, j) in w):
                acc = acc + c
        return acc

    def plus(self):
        return self - MPoly.one(self.alg) * self.eps()

    def to_u(self):
        """Expansion into u-words of the total algebra."""
        alg = self.alg
        out = alg.zero()
        for w, c in self.terms.items():
            acc = alg.one() * c
            for (i, j) in w:
                acc = acc * _zgen_u(alg, i, j)
            out = out + acc
        return out

    def delta_struct(self, k=2):
        """Iterated coproduct with the last leg kept structural: yields
        (gpolys, zword, coeff) with k-1 polynomial legs in the total algebra
        and a z-word last leg."""
        alg = self.alg
        result = []
        for w, c in self.terms.items():
            acc = [(tuple(alg.one() for _ in range(k - 1)), (), c)]
            for (i, j) in w:
                nxt = []
                for glegs, zw, cc in acc:
                    for legs2, zl in _zletter_delta(alg, i, j, k):
                        nxt.append((tuple(a * b for a, b in
                                          zip(glegs, legs2)),
                                    zw + (zl,), cc))
                acc = nxt
            result.extend(acc)
        return result

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            ws = ".".join("z[%d,%d]" % l for l in w) if w else "1"
            parts.append(ws if c.is_one() and w else "(%s)*%s" % (c, ws))
        return " + ".join(parts)

    __repr__ = __str__


_ZGEN_CACHE = {}
_ZDELTA_CACHE = {}


def _zgen_u(alg, i, j):
    key = (alg.tag, alg.size, alg.root, i, j)
    p = _ZGEN_CACHE.get(key)
    if p is None:
        p = alg.gen(i, 1) * antipode(alg.gen(1, j))
        _ZGEN_CACHE[key] = p
    return p


def _zletter_delta(alg, i, j, k):
    """Chains for the structural k-fold coproduct of one z-letter:
    legs u^{r}_{r'} S(u^{s'}_{s}) ... ending in z_{ab}."""
    key = (alg.tag, alg.size, alg.root, i, j, k)
    hit = _ZDELTA_CACHE.get(key)
    if hit is not None:
        return hit
    n = alg.size
    out = []

    def rec(row, col, legs):
        if len(legs) == k - 1:
            out.append((tuple(legs), (row, col)))
            return
        for a in range(1, n + 1):
            ua = alg.gen(row, a)
            for b in range(1, n + 1):
                leg = ua * antipode(alg.gen(b, col))
                rec(a, b, legs + [leg])

    rec(i, j, [])
    _ZDELTA_CACHE[key] = out
    return out


def zgen(alg, i, j):
    """z_ij as an MPoly (single letter)."""
    return MPoly(alg, {((i, j),): QScalar.one(alg.root)})


# -- ideal-driven quotient model ------------------------------------------------


class QuotientModel:
    """Basis of (counit kernel)_{<=d} / J_{<=d} for the right ideal J spanned
    by NF(g w) over ideal generators g and irreducible words w; with a coset
    solver in the distinguished e-basis."""

    def __init__(self, system, generators, degree, check_stable=True):
        self.system = system
        self.alg = system.alg
        self.degree = degree
        self.generators = [_clear_denominators(g) for g in generators]
        for g in self.generators:
            if counit(g):
                raise CosetError("ideal generator not in the counit kernel")
        maxgen = max(g.degree() for g in self.generators)
        if degree < maxgen:
            raise CosetError("model degree below generator degree")
        self.dimension, self.jbasis = self._build(degree)
        if check_stable:
            # compare with the previous degree where all generators already
            # contribute, else with the next degree up
            if degree - 1 >= maxgen:
                other, _ = self._build(degree - 1)
                degs = (degree - 1, degree)
            else:
                other, _ = self._build(degree + 1)
                degs = (degree, degree + 1)
            if other != self.dimension:
                raise CosetError(
                    "quotient dimension not stabilized: %d vs %d at degrees "
                    "%d/%d; increase the degree"
                    % (self.dimension, other, degs[0], degs[1]))
        self._setup_e_basis()

    def _build(self, degree):
        sys = self.system
        cols = [w for w in sys.nf_words(degree) if w]
        ech = Echelon(cols)
        for g in self.generators:
            gdeg = g.degree()
            for w in sys.nf_words(degree - gdeg, include_unit=True):
                p = sys.nf(g * NCPoly(self.alg,
                                      {w: QScalar.one(self.alg.root)}))
                vec = {wd: c for wd, c in p.terms.items() if wd}
                if vec:
                    ech.insert(vec)
        return len(cols) - ech.rank, ech

    def coset_residue(self, f):
        """Residue coordinates (over non-pivot words) of the class of f+."""
        p = self.system.nf(f)
        if p.degree() > self.degree:
            raise CosetError("degree %d beyond model degree %d"
                             % (p.degree(), self.degree))
        vec = {w: c for w, c in p.terms.items() if w}
        return self.jbasis.reduce(vec)

    def _setup_e_basis(self):
        n = self.alg.size
        self._esyms = esyms(n)
        reps = []
        for s in self._esyms:
            reps.append(self.rep_poly(s))
        piv = self.jbasis.pivot_labels()
        self._free = [w for w in self.jbasis.labels if w not in piv]
        if len(self._free) != len(self._esyms):
            raise CosetError(
                "quotient dimension %d does not match the %d basis symbols"
                % (len(self._free), len(self._esyms)))
        mat = []
        for r in reps:
            res = self.coset_residue(r)
            mat.append([res.get(w, QScalar.zero(self.alg.root))
                        for w in self._free])
        self._einv = _invert(mat)

    def rep_poly(self, s):
        alg = self.alg
        if s == ("0",):
            return alg.gen(1, 1) - alg.one()
        if s[0] == "+":
            return alg.gen(s[1] + 1, 1)
        return alg.gen(1, s[1] + 1)

    def coset(self, f):
        """Class of f+ in e-basis coordinates."""
        res = self.coset_residue(f)
        root = self.alg.root
        vec = [res.get(w, QScalar.zero(root)) for w in self._free]
        coords = {}
        for k, s in enumerate(self._esyms):
            acc = QScalar.zero(root)
            for p in range(len(vec)):
                if vec[p]:
                    acc = acc + vec[p] * self._einv[p][k]
            if acc:
                coords[s] = acc
        return CotangentVector(root, coords)


def _clear_denominators(p):
    """Rescale a polynomial so all coefficients are Laurent polynomials
    (generators of an ideal may be scaled freely; this keeps elimination
    arithmetic cheap)."""
    from .scalars import QScalar as _QS
    dens = {c.den for c in p.terms.values() if len(c.den) > 1}
    if not dens:
        return p
    mult = None
    for den in dens:
        d = _QS(0, den, (den[0],), p.alg.root)
        mult = d if mult is None else mult * d
    return p * mult


def _invert(mat):
    """Exact inverse of a small dense matrix of QScalars."""
    n = len(mat)
    root = mat[0][0].root
    aug = [[mat[i][j] for j in range(n)]
           + [QScalar.one(root) if i == j else QScalar.zero(root)
              for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            raise CosetError("basis representatives are dependent")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# -- table-driven evaluator ------------------------------------------------------


class ActionTable:
    """Base cosets of the generators and the right action of generators on
    the basis, derived from a quotient model and then used as the exact
    evaluator at any degree."""

    def __init__(self, model):
        self.model = model
        self.alg = model.alg
        n = self.alg.size
        self.esyms = esyms(n)
        self.base = {}
        for g in self.alg.gens():
            self.base[g] = model.coset(plus_part(self.alg.gen(*g)))
        self.rows = {}
        for s in self.esyms:
            rep = model.rep_poly(s)
            for g in self.alg.gens():
                self.rows[(s, g)] = model.coset(rep * self.alg.gen(*g))
        self._word_cache = {(): CotangentVector(self.alg.root)}

    # -- right action -------------------------------------------------------------

    def act_gen(self, vec, g):
        out = CotangentVector(self.alg.root)
        for s, c in vec.coords.items():
            out = out + self.rows[(s, g)] * c
        return out

    def act_word(self, vec, w):
        for g in w:
            if not vec:
                break
            vec = self.act_gen(vec, g)
        return vec

    def act_poly(self, vec, f):
        out = CotangentVector(self.alg.root)
        for w, c in f.terms.items():
            out = out + self.act_word(vec, w) * c
        return out

    # -- cosets ---------------------------------------------------------------------

    def coset_word(self, w):
        """Class of w+ via the fold identity; exact at any degree."""
        hit = self._word_cache.get(w)
        if hit is not None:
            return hit
        x, rest = w[0], w[1:]
        vec = self.act_word(self.base[x], rest)
        if x == D or x[0] == x[1]:
            vec = vec + self.coset_word(rest)
        self._word_cache[w] = vec
        return vec

    def coset_poly(self, f):
        out = CotangentVector(self.alg.root)
        for w, c in f.terms.items():
            if w:
                out = out + self.coset_word(w) * c
        return out

    def v_coset(self, m):
        """Coset of an element of the projected-space subalgebra; a nonzero
        e0 coordinate signals a foreign element or a table bug."""
        f = m.to_u() if isinstance(m, MPoly) else m
        vec = self.coset_poly(f)
        if vec.has_e0():
            raise CosetError("nonzero e0 coordinate on a projected-space "
                             "element: %s" % vec)
        return vec

    def to_json(self):
        out = {"base": {}, "rows": {}}
        for g in sorted(self.base, key=self.alg.rank):
            out["base"]["D" if g == D else "u[%d,%d]" % g] = \
                self.base[g].to_json()
        for (s, g) in sorted(self.rows,
                             key=lambda k: (_esym_key(k[0]),
                                            self.alg.rank(k[1]))):
            key = "%s <| %s" % (esym_str(s),
                                "D" if g == D else "u[%d,%d]" % g)
            out["rows"][key] = self.rows[(s, g)].to_json()
        return out


# -- the surjection onto the structure group algebra ------------------------------


def alpha_n(galg, halg, f):
    """The Hopf algebra surjection: u^1_1 -> D, first row/column -> 0,
    u^i_j -> u^{i-1}_{j-1}; multiplicative extension."""
    out = {}
    for w, c in f.terms.items():
        img = []
        dead = False
        for (i, j) in w:
            if i == 1 and j == 1:
                img.append(D)
            elif i == 1 or j == 1:
                dead = True
                break
            else:
                img.append((i - 1, j - 1))
        if dead:
            continue
        key = tuple(img)
        p = out.get(key)
        out[key] = c if p is None else p + c
    return NCPoly(halg, out)


alpha_poly = alpha_n


def is_coinvariant(f, gsys, hsys, galg, halg):
    """Whether (id (x) alpha) Delta(f) reduces to f (x) 1 leg-wise."""
    t = coproduct(f, 2)
    acc = {}
    for (w1, w2), c in t.terms.items():
        h = alpha_n(galg, halg, NCPoly(galg, {w2: c}))
        h = hsys.nf(h)
        if h.is_zero():
            continue
        g1 = gsys.nf(NCPoly(galg, {w1: QScalar.one(galg.root)}))
        for wg, cg in g1.terms.items():
            for wh, ch in h.terms.items():
                key = (wg, wh)
                v = cg * ch
                p = acc.get(key)
                acc[key] = v if p is None else p + v
    fn = gsys.nf(f)
    for w, c in fn.terms.items():
        key = (w, ())
        p = acc.get(key)
        acc[key] = -c if p is None else p - c
    return all(not c for c in acc.values())


# -- the three-dimensional calculus on the total space at N=2 ----------------------


def woronowicz_ideal_su2(alg):
    """Right-ideal generators of the classical three-dimensional calculus
    on the N=2 total space, in the letters a,b,c,d = u11,u12,u21,u22:
    <a + q^2 d - (1+q^2), b^2, c^2, bc, (a-1)b, (a-1)c>."""
    if alg.size != 2:
        raise ValueError("the three-dimensional calculus lives at N=2")
    a = alg.gen(1, 1)
    b = alg.gen(1, 2)
    c = alg.gen(2, 1)
    d = alg.gen(2, 2)
    one = alg.one()
    q2 = alg.q(2)
    return [
        a + d * q2 - one * (alg.scalar(1) + q2),
        b * b, c * c, b * c,
        (a - one) * b, (a - one) * c,
    ]
