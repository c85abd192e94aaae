"""Framed one-forms and the canonical framing of the projected-space
calculus: a one-form sum m dn maps to m n_(1) (x) class((n_(2))+), with the
coinvariant-side leg stored in cotangent coordinates.

Geometry bundles one construction of the calculus (algebras, completed
rewrite systems, quotient model, action table) and carries the framing,
its inverse, the degree-zero exterior derivative with its two projections,
the star map on framed forms, and the structure-group coaction.
"""

from .scalars import QScalar
from .algebra import NCPoly, D, antipode, star, counit, word_key
from .cotangent import (CotangentVector, CosetError, MPoly, zgen,
                        QuotientModel, ActionTable, alpha_n, esyms, vsyms,
                        esym_str)

__all__ = ["FramedOneForm", "Geometry"]


def _gpaths(w, n):
    """Sweedler terms of Delta on a u-word: (left word, right word) pairs."""
    out = [((), ())]
    for (i, j) in w:
        nxt = []
        for w1, w2 in out:
            for k in range(1, n + 1):
                nxt.append((w1 + ((i, k),), w2 + ((k, j),)))
        out = nxt
    return out


class FramedOneForm:
    """Element of the framed space: total-algebra words (in normal form)
    paired with cotangent vectors."""

    __slots__ = ("root", "data")

    def __init__(self, root, data=None):
        self.root = root
        self.data = {w: v for w, v in (data or {}).items() if v}

    def __add__(self, other):
        out = dict(self.data)
        for w, v in other.data.items():
            p = out.get(w)
            nv = v if p is None else p + v
            if nv:
                out[w] = nv
            else:
                out.pop(w, None)
        return FramedOneForm(self.root, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FramedOneForm(self.root,
                             {w: -v for w, v in self.data.items()})

    def __mul__(self, c):
        return FramedOneForm(self.root,
                             {w: v * c for w, v in self.data.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FramedOneForm) and self.data == other.data

    def is_zero(self):
        return not self.data

    def project(self, sign):
        return FramedOneForm(self.root,
                             {w: v.project(sign)
                              for w, v in self.data.items()})

    def __str__(self):
        if not self.data:
            return "0"
        parts = []
        for w in sorted(self.data, key=len):
            ws = ".".join("D" if s == D else "u[%d,%d]" % s
                          for s in w) if w else "1"
            parts.append("%s (x) (%s)" % (ws, self.data[w]))
        return "  +  ".join(parts)

    __repr__ = __str__


class Geometry:
    """One construction of the calculus on the total space together with
    the projected-space embedding."""

    def __init__(self, galg, halg, gsys, hsys, model, table):
        self.galg = galg
        self.halg = halg
        self.gsys = gsys
        self.hsys = hsys
        self.model = model
        self.table = table
        self.n = galg.size
        self.root = galg.root
        self._zcoset_cache = {}
        self._coaction = None
        self._zreps = {}
        for s in vsyms(self.n):
            rep = self._make_zrep(s)
            if self.v_coset(rep) != CotangentVector(
                    self.root, {s: QScalar.one(self.root)}):
                raise CosetError("canonical lift of %s does not represent it"
                                 % esym_str(s))
            self._zreps[s] = rep

    def _make_zrep(self, s):
        k = s[1]
        if s[0] == "+":
            return zgen(self.galg, k + 1, 1) * QScalar.q_pow(-2 * k - 1,
                                                             self.root)
        return zgen(self.galg, 1, k + 1) * QScalar.q_pow(2 * k + 1,
                                                         self.root)

    def zrep(self, s):
        return self._zreps[s]

    # -- cosets -------------------------------------------------------------------

    def v_coset(self, m):
        return self.table.v_coset(m)

    def lambda_coset(self, f):
        return self.table.coset_poly(f)

    def _zword_coset(self, zw):
        hit = self._zcoset_cache.get(zw)
        if hit is None:
            hit = self.v_coset(MPoly(self.galg,
                                     {zw: QScalar.one(self.root)}))
            self._zcoset_cache[zw] = hit
        return hit

    def zclass(self, i, j):
        """Class of z_ij."""
        return self._zword_coset(((i, j),))

    # -- canonical framing ------------------------------------------------------------

    def frame_pairs(self, pairs):
        """Frame a one-form given by (coefficient, differential) pairs:
        sum_i f_i d(n_i) -> sum f_i (n_i)_(1) (x) class(((n_i)_(2))+).
        The first members may be arbitrary total-algebra elements; the
        second members live on the projected space."""
        out = {}
        for f, mn in pairs:
            if isinstance(f, MPoly):
                f = f.to_u()
            for glegs, zw, coeff in mn.delta_struct(2):
                v = self._zword_coset(zw)
                if not v:
                    continue
                g = self.gsys.nf(f * glegs[0] * coeff)
                for w, c in g.terms.items():
                    cur = out.get(w)
                    add = v * c
                    nv = add if cur is None else cur + add
                    if nv:
                        out[w] = nv
                    else:
                        out.pop(w, None)
        return FramedOneForm(self.root, out)

    def canonical_framing(self, m, n):
        return self.frame_pairs([(m, n)])

    def exterior_d0(self, m):
        """d m, framed: the canonical framing of 1 dm."""
        return self.frame_pairs([(self.galg.one(), m)])

    def del0(self, m):
        return self.exterior_d0(m).project("+")

    def delbar0(self, m):
        return self.exterior_d0(m).project("-")

    def framing_inverse(self, x):
        """Pairs (f, n) with sum f d(n) framing back to x, using the
        canonical lifts of the basis vectors."""
        acc = {}
        for w, vec in x.data.items():
            if vec.has_e0():
                raise CosetError("framed form has an e0 coordinate")
            base = NCPoly(self.galg, {w: QScalar.one(self.root)})
            for s, coord in vec.coords.items():
                rep = self._zreps[s]
                for glegs, zw, coeff in rep.delta_struct(2):
                    f = base * antipode(glegs[0]) * (coord * coeff)
                    cur = acc.get(zw)
                    acc[zw] = f if cur is None else cur + f
        out = []
        for zw in sorted(acc):
            f = self.gsys.nf(acc[zw])
            if f:
                out.append((f, MPoly(self.galg,
                                     {zw: QScalar.one(self.root)})))
        return out

    # -- module structure (for the framed Leibniz rule) ------------------------------

    def right_mult(self, x, m):
        """(sum g (x) v) m = sum g m_(1) (x) (v <| m_(2))."""
        if isinstance(m, MPoly):
            m = m.to_u()
        out = FramedOneForm(self.root)
        for wm, cm in m.terms.items():
            for w1, w2 in _gpaths(wm, self.n):
                for w, vec in x.data.items():
                    moved = self.table.act_word(vec, w2) * cm
                    if not moved:
                        continue
                    g = self.gsys.nf(NCPoly(self.galg,
                                            {w + w1: QScalar.one(self.root)}))
                    for wg, cg in g.terms.items():
                        add = moved * cg
                        cur = out.data.get(wg)
                        nv = add if cur is None else cur + add
                        if nv:
                            out.data[wg] = nv
                        else:
                            out.data.pop(wg, None)
        return out

    def left_mult(self, x, m):
        if isinstance(m, MPoly):
            m = m.to_u()
        out = {}
        for w, vec in x.data.items():
            g = self.gsys.nf(m * NCPoly(self.galg,
                                        {w: QScalar.one(self.root)}))
            for wg, cg in g.terms.items():
                add = vec * cg
                cur = out.get(wg)
                nv = add if cur is None else cur + add
                if nv:
                    out[wg] = nv
                else:
                    out.pop(wg, None)
        return FramedOneForm(self.root, out)

    # -- star ----------------------------------------------------------------------

    def star_framed(self, x):
        """g (x) class(v) -> g_(1)* (x) class(S(v*) g_(2)*)."""
        out = {}
        for w, vec in x.data.items():
            repu = self.galg.zero()
            for s, c in vec.coords.items():
                repu = repu + self._zreps[s].to_u() * c
            sstar = antipode(star(repu))
            for w1, w2 in _gpaths(w, self.n):
                left = self.gsys.nf(star(NCPoly(
                    self.galg, {w1: QScalar.one(self.root)})))
                if left.is_zero():
                    continue
                mid = sstar * star(NCPoly(self.galg,
                                          {w2: QScalar.one(self.root)}))
                midvec = self.table.coset_poly(mid)
                if not midvec:
                    continue
                for lw, lc in left.terms.items():
                    add = midvec * lc
                    cur = out.get(lw)
                    nv = add if cur is None else cur + add
                    if nv:
                        out[lw] = nv
                    else:
                        out.pop(lw, None)
        for w, vec in out.items():
            if vec.has_e0():
                raise CosetError("star left the framed space: e0 at %r" % (w,))
        return FramedOneForm(self.root, out)

    # -- structure-group coaction -----------------------------------------------------

    def coaction_rows(self):
        """Derived right coaction on the basis: {esym: [(esym', h)]} with h
        a normal-form H-polynomial.

        The e+/e- rows are computed from the projected-space representatives
        (the subalgebra's own comodule structure); the e0 row from the
        total-space representative, where no subalgebra lift exists.
        """
        if self._coaction is not None:
            return self._coaction
        rows = {}
        for s in vsyms(self.n):
            rep = self._zreps[s]
            acc = {}
            for glegs, zw, coeff in rep.delta_struct(2):
                h = self.hsys.nf(antipode(
                    alpha_n(self.galg, self.halg, glegs[0])))
                if h.is_zero():
                    continue
                v = self._zword_coset(zw)
                for s2, c2 in v.coords.items():
                    add = h * (c2 * coeff)
                    cur = acc.get(s2)
                    acc[s2] = add if cur is None else cur + add
            rows[s] = [(s2, h) for s2, h in sorted(
                acc.items(), key=lambda t: _esort(t[0])) if h]
        # e0 via the total-space representative u^1_1 - 1
        rep = self.galg.gen(1, 1) - self.galg.one()
        acc = {}
        for wm, cm in rep.terms.items():
            for w1, w2 in _gpaths(wm, self.n):
                h = self.hsys.nf(antipode(alpha_n(
                    self.galg, self.halg,
                    NCPoly(self.galg, {w1: cm}))))
                if h.is_zero():
                    continue
                v = self.table.coset_poly(
                    NCPoly(self.galg, {w2: QScalar.one(self.root)}))
                for s2, c2 in v.coords.items():
                    add = h * c2
                    cur = acc.get(s2)
                    acc[s2] = add if cur is None else cur + add
        rows[("0",)] = [(s2, h) for s2, h in sorted(
            acc.items(), key=lambda t: _esort(t[0])) if h]
        self._coaction = rows
        return rows

    def v_coaction(self, vec):
        """Right coaction of the structure group on a cotangent vector:
        list of (esym, h) pairs with h in normal form."""
        rows = self.coaction_rows()
        acc = {}
        for s, c in vec.coords.items():
            for s2, h in rows[s]:
                add = h * c
                cur = acc.get(s2)
                acc[s2] = add if cur is None else cur + add
        return [(s2, self.hsys.nf(h)) for s2, h in
                sorted(acc.items(), key=lambda t: _esort(t[0]))
                if not self.hsys.nf(h).is_zero()]

    def framed_coinvariant(self, x):
        """Whether (coaction on both legs, H parts multiplied left to right)
        reproduces x (x) 1."""
        rows = self.coaction_rows()
        acc = {}
        for w, vec in x.data.items():
            for w1, w2 in _gpaths(w, self.n):
                ha = alpha_n(self.galg, self.halg,
                             NCPoly(self.galg, {w2: QScalar.one(self.root)}))
                if ha.is_zero():
                    continue
                g1 = self.gsys.nf(NCPoly(self.galg,
                                         {w1: QScalar.one(self.root)}))
                for s, c in vec.coords.items():
                    for s2, h in rows[s]:
                        total = self.hsys.nf(ha * h)
                        if total.is_zero():
                            continue
                        for wg, cg in g1.terms.items():
                            for wh, ch in total.terms.items():
                                key = (wg, s2, wh)
                                add = c * cg * ch
                                cur = acc.get(key)
                                nv = add if cur is None else cur + add
                                if nv:
                                    acc[key] = nv
                                else:
                                    acc.pop(key, None)
        for w, vec in x.data.items():
            for s, c in vec.coords.items():
                key = (w, s, ())
                cur = acc.get(key)
                nv = -c if cur is None else cur - c
                if nv:
                    acc[key] = nv
                else:
                    acc.pop(key, None)
        return not acc


def _esort(s):
    order = {"+": 0, "0": 1, "-": 2}
    return (order[s[0]], s[1] if len(s) > 1 else 0)
