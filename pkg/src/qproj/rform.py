"""The R-matrix, the coquasi-triangular form r on word pairs, and the
quantum Killing matrix Q with its degree-bounded kernel.

r is defined on generators by r(u^i_j (x) u^k_l) = q^(-1/N) R^{ki}_{jl} and
extended through the standard bimultiplicativity axioms

    r(fg (x) h) = r(f (x) h_(1)) r(g (x) h_(2)),
    r(f (x) gh) = r(f_(1) (x) h) r(f_(2) (x) g),
    r(1 (x) f) = r(f (x) 1) = eps(f).

Both extension axioms are imported conventions; that r vanishes on every
defining relation is an executable gate (see tests), so a transcription
slip in the R-matrix fails fast.
"""

from .scalars import QScalar
from .algebra import NCPoly, _eps_word
from .rewrite import r_matrix_entry
from .linalg import rref, nullspace

__all__ = ["RForm", "qybe_holds", "ker_q_basis"]


class RForm:
    """Coquasi-triangular form and quantum Killing matrix for tag G."""

    def __init__(self, alg):
        if alg.tag != "G":
            raise ValueError("the r form lives on the G algebra")
        self.alg = alg
        self._cache = {}
        self._tinv = QScalar.t_pow(-1, alg.root)

    # -- base and recursion on words -------------------------------------------

    def _base(self, x, y):
        # r(u^i_j (x) u^k_l) = q^(-1/N) R^{ki}_{jl}
        i, j = x
        k, l = y
        return self._tinv * r_matrix_entry(self.alg, k, i, j, l)

    def r_word(self, a, b):
        key = (a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        root = self.alg.root
        n = self.alg.size
        if not a:
            val = (QScalar.one(root) if _eps_word(b)
                   else QScalar.zero(root))
        elif not b:
            val = (QScalar.one(root) if _eps_word(a)
                   else QScalar.zero(root))
        elif len(a) == 1 and len(b) == 1:
            val = self._base(a[0], b[0])
        elif len(a) == 1:
            # r(x (x) v.w) = sum_k r(x_(1) (x) w) r(x_(2) (x) v)
            i, j = a[0]
            v, w = b[0], b[1:]
            val = QScalar.zero(root)
            for k in range(1, n + 1):
                c1 = self.r_word(((i, k),), w)
                if c1:
                    c2 = self.r_word(((k, j),), (v,))
                    if c2:
                        val = val + c1 * c2
        else:
            # r(x.rest (x) b) = sum over Delta(b) paths
            x, rest = a[0], a[1:]
            val = QScalar.zero(root)
            for b1, b2 in _paths(b, n):
                c1 = self.r_word((x,), b1)
                if c1:
                    c2 = self.r_word(rest, b2)
                    if c2:
                        val = val + c1 * c2
        self._cache[key] = val
        return val

    def r_eval(self, f, g):
        """Bilinear extension to polynomials (tag G both)."""
        acc = QScalar.zero(self.alg.root)
        for wa, ca in f.terms.items():
            for wb, cb in g.terms.items():
                v = self.r_word(wa, wb)
                if v:
                    acc = acc + v * ca * cb
        return acc

    # -- quantum Killing matrix --------------------------------------------------

    def q_word(self, w):
        """Q applied to one word, as a size x size list of lists."""
        n = self.alg.size
        root = self.alg.root
        out = [[QScalar.zero(root) for _ in range(n)] for _ in range(n)]
        for w1, w2 in _paths(w, n):
            for k in range(1, n + 1):
                for a in range(1, n + 1):
                    c1 = self.r_word(((k, a),), w1)
                    if not c1:
                        continue
                    for l in range(1, n + 1):
                        c2 = self.r_word(w2, ((a, l),))
                        if c2:
                            out[k - 1][l - 1] = out[k - 1][l - 1] + c1 * c2
        return out

    def q_matrix(self, f):
        """Q_{kl}(f) = sum_a r(u^k_a (x) f_(1)) r(f_(2) (x) u^a_l)."""
        n = self.alg.size
        root = self.alg.root
        out = [[QScalar.zero(root) for _ in range(n)] for _ in range(n)]
        for w, c in f.terms.items():
            qw = self.q_word(w)
            for i in range(n):
                for j in range(n):
                    v = qw[i][j]
                    if v:
                        out[i][j] = out[i][j] + v * c
        return out

    def q_vanishes(self, f):
        return all(not c for row in self.q_matrix(f) for c in row)


def _paths(w, n):
    """Sweedler terms of Delta on a word of u-generators: pairs of words."""
    out = [((), ())]
    for (i, j) in w:
        nxt = []
        for w1, w2 in out:
            for k in range(1, n + 1):
                nxt.append((w1 + ((i, k),), w2 + ((k, j),)))
        out = nxt
    return out


def qybe_holds(alg):
    """Quantum Yang-Baxter equation R12 R13 R23 = R23 R13 R12 on (C^N)^x3,
    checked as an exact identity entry by entry."""
    n = alg.size

    def R(i, k, j, l):
        return r_matrix_entry(alg, i, k, j, l)

    idx = range(1, n + 1)
    for a in idx:
        for b in idx:
            for c in idx:
                for d in idx:
                    for e in idx:
                        for f in idx:
                            lhs = QScalar.zero(alg.root)
                            rhs = QScalar.zero(alg.root)
                            for x in idx:
                                for y in idx:
                                    for z in idx:
                                        # R12 R13 R23 acting (a,b,c)->(d,e,f)
                                        v = (R(x, y, d, e) * R(a, z, x, f)
                                             * R(b, c, y, z))
                                        if v:
                                            lhs = lhs + v
                                        v = (R(y, z, e, f) * R(x, c, d, z)
                                             * R(a, b, x, y))
                                        if v:
                                            rhs = rhs + v
                            if lhs != rhs:
                                return False
    return True


def ker_q_basis(rform, system, max_degree):
    """Basis of {f in span(w+ : w irreducible, deg <= max_degree) : Q(f)=0},
    i.e. the kernel of Q inside the counit kernel, via exact elimination on
    the N^2 coordinate functionals.  Q(w+) = Q(w) - eps(w) Q(1) with
    Q(1) = id."""
    alg = rform.alg
    n = alg.size
    words = [w for w in system.nf_words(max_degree) if w]
    root = alg.root
    one = QScalar.one(root)
    entries = {}
    for w in words:
        qw = rform.q_word(w)
        if _eps_word(w):
            for d in range(n):
                qw[d][d] = qw[d][d] - one
        vec = {}
        for i in range(n):
            for j in range(n):
                if qw[i][j]:
                    vec[(i, j)] = qw[i][j]
        entries[w] = vec
    cols = [(i, j) for i in range(n) for j in range(n)]
    sols = nullspace(words, cols, entries)
    out = []
    for sol in sols:
        p = alg.zero()
        for w, c in sol.items():
            p = p + (alg.word(*w) - alg.one() * (one if _eps_word(w)
                                                 else QScalar.zero(root))) * c
        out.append(p)
    return out


def quotient_rank_by_q(rform, system, max_degree):
    """Rank of the Q-coordinate system on plus-parts of irreducible words;
    the codimension of the kernel inside that span."""
    alg = rform.alg
    n = alg.size
    words = [w for w in system.nf_words(max_degree) if w]
    one = QScalar.one(alg.root)
    vecs = []
    for w in words:
        qw = rform.q_word(w)
        if _eps_word(w):
            for d in range(n):
                qw[d][d] = qw[d][d] - one
        vecs.append({(i, j): qw[i][j] for i in range(n) for j in range(n)
                     if qw[i][j]})
    cols = [(i, j) for i in range(n) for j in range(n)]
    return rref(cols, vecs).rank
