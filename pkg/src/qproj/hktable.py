"""Direct construction of the distinguished cotangent action table on the
total space, stage-solving the structure constants from the defining
relations, the determinant relation, and the projected-space class pins
[z_i1] = q^(2i-1) e+_{i-1}.

The published action data for this calculus is fragmentary (index ranges
are inconsistent, the e0 row and diagonal base cosets are absent), so the
table is derived here from first principles and then validated:

  * off-diagonal actions: lower-triangular letters act on the e+ block and
    upper-triangular letters on the e- block, by q^(-2/N) nu shifts;
    everything else off-diagonal vanishes (forced by the torus grading and
    the antidiagonal commutation relations);
  * diagonal actions, the e0 row and the diagonal base cosets follow
    sequentially from fold-consistency with the relations and det = 1;
  * the class of z_1i comes out as MINUS q^(1-2i) e-_{i-1}; the positive
    sign would contradict the bd = q db relation (see the ledger).

After solving, `validate` re-checks every defining relation fold against
words up to a degree bound, which certifies the table defines a calculus.
"""

from .scalars import QScalar
from .algebra import NCPoly, antipode, counit
from .cotangent import (CotangentVector, CosetError, ActionTable, esyms,
                        zgen)

__all__ = ["solve_hk_table"]


class _Table:
    """Bare action-table data produced by the solver; same evaluation
    surface as ActionTable (base cosets + action rows)."""

    def __init__(self, alg):
        self.alg = alg
        self.esyms = esyms(alg.size)
        self.base = {}
        self.rows = {}
        self._word_cache = {(): CotangentVector(alg.root)}

    act_gen = ActionTable.act_gen
    act_word = ActionTable.act_word
    act_poly = ActionTable.act_poly
    coset_word = ActionTable.coset_word
    coset_poly = ActionTable.coset_poly
    v_coset = ActionTable.v_coset
    to_json = ActionTable.to_json


def _poly_sqrt(p):
    """Exact square root of a polynomial tuple, or None."""
    from fractions import Fraction
    from .scalars import _pmul, _trim
    p = _trim(p)
    if not p:
        return ()
    if (len(p) - 1) % 2:
        return None
    d = (len(p) - 1) // 2
    lead = p[-1]
    rn, rd = _isqrt(lead.numerator), _isqrt(lead.denominator)
    if rn is None or rd is None:
        return None
    r = [Fraction(0)] * (d + 1)
    r[d] = Fraction(rn, rd)
    for m in range(d - 1, -1, -1):
        acc = Fraction(0)
        for a in range(m + 1, d):
            b = d + m - a
            if m < b < d:
                acc += r[a] * r[b]
        target = p[d + m] if d + m < len(p) else Fraction(0)
        r[m] = (target - acc) / (2 * r[d])
    out = tuple(r)
    if _pmul(out, out) != p:
        return None
    return out


def _isqrt(m):
    if m < 0:
        return None
    r = int(m ** 0.5)
    for c in (r - 1, r, r + 1, r + 2):
        if c >= 0 and c * c == m:
            return c
    return None


def _sqrt_scalar(s, root):
    """Exact square root of a QScalar, or None if not a square."""
    if s.is_zero():
        return QScalar.zero(root)
    if s.shift % 2:
        return None
    num = _poly_sqrt(s.num)
    den = _poly_sqrt(s.den)
    if num is None or den is None:
        return None
    return QScalar(s.shift // 2, num, den, root)


def solve_hk_table(alg):
    """Solve the table for matrix size N = alg.size (N = 2 or 3)."""
    n = alg.size
    if n not in (2, 3):
        raise CosetError("table solver implemented for N = 2, 3")
    root = alg.root
    q = alg.q()
    one = QScalar.one(root)
    zero = QScalar.zero(root)
    nu = alg.nu()
    f = QScalar.t_pow(-2, root) * nu  # q^(-2/N) nu
    qm2n = QScalar.t_pow(-2, root)    # q^(-2/N)

    def ev(sym, c):
        return CotangentVector(root, {sym: c})

    t = _Table(alg)

    # ---- off-diagonal actions on the e+/e- blocks --------------------------
    pplus = {}   # (i, k) -> e+_i <| u^k_k
    pminus = {}
    for i in range(1, n):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if j == k:
                    continue
                # e+_i <| u^j_k: nonzero only for k = i+1, j >= i+2 (lower)
                if k == i + 1 and j >= i + 2:
                    t.rows[(("+", i), (j, k))] = ev(("+", j - 1), f)
                else:
                    t.rows[(("+", i), (j, k))] = CotangentVector(root)
                # e-_i <| u^j_k: nonzero only for j = i+1, k >= i+2 (upper)
                if j == i + 1 and k >= i + 2:
                    t.rows[(("-", i), (j, k))] = ev(("-", k - 1), f)
                else:
                    t.rows[(("-", i), (j, k))] = CotangentVector(root)

    # ---- diagonal actions ---------------------------------------------------
    # P+-[i][1] = q^-(2i+1) (det fold); P+-[i][k] = q^(-2/N) for 2 <= k <= i
    for i in range(1, n):
        pplus[(i, 1)] = q ** -(2 * i + 1)
        pminus[(i, 1)] = None  # solved below
        for k in range(2, i + 1):
            pplus[(i, k)] = qm2n
            pminus[(i, k)] = qm2n

    # class pins: prod_{k>=2} P+[i,k] = q^(2i+1)
    if n == 2:
        pplus[(1, 2)] = q ** 3
    else:
        pplus[(2, 3)] = q ** 5 / qm2n

    # e- side: Songenerators give the highest diagonal entries, then the
    # det fold fills in the rest.
    # N=2: [S(u^1_2)] = -q^(4/N+1-4) e-_1 with S(u^1_2) = -q^{-1} u^1_2 is
    # trivially consistent; the pin [z_12] = -q^{-3} e-_1 yields g-_2 and
    # P-[1,1] (solved in the g-stage below).
    # N=3: [S(u^1_2)] = -q^{-1} P-[1,3] e-_1 = -q^(4/3-3) e-_1.
    if n == 3:
        # [S(u^1_2)] = -q^{-1} P-[1,3] e-_1 must equal -q^{4/3+1-4} e-_1,
        # so P-[1,3] = q^{4/3-2} = q^(-2/3)
        pminus[(1, 3)] = qm2n

    # g-: e0 <| u^1_j = g-_j e-_{j-1}; from the corrected z_1i pins:
    # [z_1i] = -q^(1-2i) e-_{i-1}
    gminus = {}
    if n == 2:
        gminus[2] = q ** -2 - one
        pminus[(1, 1)] = (one + gminus[2]) / q
    else:
        # [z_12] = -q^{-1} P-[1,3] (1 + g-_2) = -q^{-3}
        #   using [z_12] = e0 <| S(u^1_2) + [S(u^1_2)] with
        #   e0 <| (u^1_2 u^3_3) = g-_2 P-[1,3]
        gminus[2] = (q ** -3) / (q ** -1 * pminus[(1, 3)]) - one
        pminus[(1, 1)] = (one + gminus[2]) / q
        # det fold on e-_1: P-[1,1] P-[1,2] P-[1,3] = 1
        pminus[(1, 2)] = one / (pminus[(1, 1)] * pminus[(1, 3)])
        # z_13 pin determines g-_3 through
        # [z_13] = e0 <| S(u^1_3) + [S(u^1_3)] = -q^{-5} e-_2;
        # S(u^1_3) = q^{-2}(u^1_2 u^2_3 - q u^1_3 u^2_2):
        #   e0-route: q^{-2}(g-_2 f - q g-_3 P-[2,2])
        #   base-route: [S(u^1_3)] = q^{-2}(f - q P-[2,2])
        val = q ** -5 / (q ** -2)  # q^{-3} target for the bracket sum
        # bracket: g-_2 f - q g-_3 P-[2,2] + f - q P-[2,2] = -q^{-3}
        gminus[3] = ((gminus[2] * f + f - pminus[(2, 2)] * q + val) /
                     (q * pminus[(2, 2)]))
        # det fold on e-_2 with P-[2,2] known: P-[2,1] P-[2,2] P-[2,3] = 1
        # and g-_3 = q P-[2,1] - 1 (same-column relation with u^1_1)
        pminus[(2, 1)] = (one + gminus[3]) / q
        pminus[(2, 3)] = one / (pminus[(2, 1)] * pminus[(2, 2)])

    # g+: e0 <| u^j_1 = g+_j e+_{j-1} = (q P+[j-1,1] - 1) e+_{j-1}
    gplus = {}
    for j in range(2, n + 1):
        gplus[j] = q * pplus[(j - 1, 1)] - one

    # lambda_k ([u^k_k - 1] = lambda_k e0) and remaining upper diagonals
    lam = {1: one}
    if n == 2:
        # P+[1,2] = q(1 + lambda_2 g+_2)
        lam[2] = (pplus[(1, 2)] / q - one) / gplus[2]
        # mirror: P-[1,2] = q(1 + lambda_2 g-_2)
        pminus[(1, 2)] = q * (one + lam[2] * gminus[2])
    else:
        # P-[1,3] = 1 + lambda_3 g-_2  (k > i+1 case on the minus side)
        lam[3] = (pminus[(1, 3)] - one) / gminus[2]
        # P+[1,3] = 1 + lambda_3 g+_2, then P+[1,2] from the z pin product
        pplus[(1, 3)] = one + lam[3] * gplus[2]
        pplus[(1, 2)] = q ** 3 / pplus[(1, 3)]
        lam[2] = (pplus[(1, 2)] / q - one) / gplus[2]
        # consistency: P-[1,2] = q(1 + lambda_2 g-_2)
        expect = q * (one + lam[2] * gminus[2])
        if expect != pminus[(1, 2)]:
            raise CosetError("table solve inconsistent: P-[1,2] %s vs %s"
                             % (pminus[(1, 2)], expect))
        # consistency: P+[2,2] = 1 + lambda_2 g+_3 (k <= i case was pinned)
        expect = one + lam[2] * gplus[3]
        if expect != pplus[(2, 2)]:
            raise CosetError("table solve inconsistent: P+[2,2] %s vs %s"
                             % (pplus[(2, 2)], expect))
        # consistency: P-[2,3] = q(1 + lambda_3 g-_3)
        expect = q * (one + lam[3] * gminus[3])
        if expect != pminus[(2, 3)]:
            raise CosetError("table solve inconsistent: P-[2,3] %s vs %s"
                             % (pminus[(2, 3)], expect))
        # consistency: P+[2,3] = q(1 + lambda_3 g+_3)
        expect = q * (one + lam[3] * gplus[3])
        if expect != pplus[(2, 3)]:
            raise CosetError("table solve inconsistent: P+[2,3] %s vs %s"
                             % (pplus[(2, 3)], expect))

    # mu_k: e0 <| u^k_k = mu_k e0; mu_k = 1 + lambda_k (mu_1 - 1) for k >= 2,
    # with mu_1 mu_2 ... mu_n = 1 (det fold on e0) and
    # mu_2 mu_3 ... + (base det fold) = 1.
    # fold(det) = 0 in the quotient (det = 1 kills the class) and
    # e0 <| det = e0 pin the e0 diagonal; for N=3 they reduce to one
    # quadratic in x = mu_1 - 1 via mu_k = 1 + lambda_k (mu_1 - 1).
    if n == 2:
        mu2 = -lam[2]
        mus = {1: one / mu2, 2: mu2}
        if mus[2] != one + lam[2] * (mus[1] - one):
            raise CosetError("table solve inconsistent in the e0 diagonal")
    else:
        # l2 l3 x^2 + (l2 + l3 + l2 l3) x + (1 + l2 + l3) = 0
        a2 = lam[2] * lam[3]
        b2 = lam[2] + lam[3] + lam[2] * lam[3]
        c2 = one + lam[2] + lam[3]
        disc = b2 * b2 - a2 * c2 * 4
        rt = _sqrt_scalar(disc, root)
        if rt is None:
            raise CosetError("table solve: e0 discriminant is not a square")
        half = QScalar.from_rational(1, root) / QScalar.from_rational(2, root)
        mus = None
        for sgn in (one, -one):
            x = (-b2 + rt * sgn) * half / a2
            m1, m2, m3 = one + x, one + lam[2] * x, one + lam[3] * x
            if m2.is_zero() or m3.is_zero() or m1.is_zero():
                continue
            if (m1 * m2 * m3) == one and \
                    (m2 * m3 + lam[2] * m3 + lam[3]).is_zero():
                mus = {1: m1, 2: m2, 3: m3}
                break
        if mus is None:
            raise CosetError("no consistent e0 diagonal")

    # ---- install diagonal rows and base cosets ------------------------------
    for i in range(1, n):
        for k in range(1, n + 1):
            t.rows[(("+", i), (k, k))] = ev(("+", i), pplus[(i, k)])
            t.rows[(("-", i), (k, k))] = ev(("-", i), pminus[(i, k)])
    for k in range(1, n + 1):
        t.rows[(("0",), (k, k))] = ev(("0",), mus[k])
        for j in range(1, n + 1):
            if j == k:
                continue
            if k == 1:
                t.rows[(("0",), (j, 1))] = ev(("+", j - 1), gplus[j])
            elif j == 1:
                t.rows[(("0",), (1, k))] = ev(("-", k - 1), gminus[k])
            else:
                t.rows[(("0",), (j, k))] = CotangentVector(root)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            g = (i, j)
            if i == j:
                t.base[g] = ev(("0",), lam[i])
            elif j == 1:
                t.base[g] = ev(("+", i - 1), one)
            elif i == 1:
                t.base[g] = ev(("-", j - 1), one)
            else:
                t.base[g] = CotangentVector(root)
    return t


def validate_table(table, system, degree=4):
    """Certify that the table fold annihilates every defining relation
    multiplied by every word up to the degree bound; this is exactly
    well-definedness of the coset map on the quotient."""
    from .rewrite import build_relations
    alg = table.alg
    rels = build_relations(alg)
    words = system.nf_words(degree - 2, include_unit=True)
    for rel in rels:
        for w in words:
            p = rel * NCPoly(alg, {w: QScalar.one(alg.root)})
            if table.coset_poly(p):
                raise CosetError(
                    "table fold does not annihilate a relation multiple: "
                    "%s * %s" % (rel, w))
    return True
