"""Normal forms in the quantized coordinate rings via oriented polynomial
rewriting with degree-bounded overlap completion (diamond lemma style).

The monomial order is degree-lex over the row-major generator order with D
largest.  Every defining relation is oriented on its leading word; overlap
and inclusion ambiguities up to a degree cap are resolved by adding new
rules, after which normal forms of bounded degree are canonical.

Reductions of words beyond the completion degree are still sound rewrites,
but uniqueness is not guaranteed there; such reductions are counted on the
system's `overflow` warning channel instead of failing.
"""

from .scalars import QScalar
from .algebra import (Algebra, NCPoly, D, quantum_determinant, word_key,
                      parse_poly)

__all__ = ["RewriteError", "RewriteSystem", "build_relations",
           "complete", "normal_form"]


class RewriteError(RuntimeError):
    pass


def r_matrix_entry(alg, i, k, j, l):
    """R^{ik}_{jl} = q^{d_ik} d_il d_kj + nu H(k-i) d_ij d_kl, H(0) = 0."""
    acc = QScalar.zero(alg.root)
    if i == l and k == j:
        acc = acc + (alg.q() if i == k else alg.scalar(1))
    if k > i and i == j and k == l:
        acc = acc + alg.nu()
    return acc


def build_relations(alg):
    """Defining relation polynomials: the R-matrix relations for the u's,
    plus det - 1 for tag G, plus det*D - 1, D*det - 1 and centrality moves
    for D under tag H."""
    n = alg.size
    rels = []
    seen = set()
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                for d in range(1, n + 1):
                    p = alg.zero()
                    for w in range(1, n + 1):
                        for x in range(1, n + 1):
                            coef = r_matrix_entry(alg, a, c, w, x)
                            if coef:
                                p = p + alg.word((w, b), (x, d)) * coef
                    for y in range(1, n + 1):
                        for z in range(1, n + 1):
                            coef = r_matrix_entry(alg, y, z, b, d)
                            if coef:
                                p = p - alg.word((a, y), (c, z)) * coef
                    if p:
                        key = _monic_key(p)
                        if key not in seen:
                            seen.add(key)
                            rels.append(p)
    det = quantum_determinant(alg)
    if alg.tag == "G":
        rels.append(det - alg.one())
    else:
        dgen = alg.gen("D")
        rels.append(det * dgen - alg.one())
        rels.append(dgen * det - alg.one())
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                u = alg.gen(i, j)
                rels.append(dgen * u - u * dgen)
    return rels


def _monic_key(p):
    lead = max(p.terms, key=lambda w: word_key(p.alg, w))
    c = p.terms[lead]
    return frozenset((w, v / c) for w, v in p.terms.items())


class Rule:
    __slots__ = ("lead", "repl")

    def __init__(self, lead, repl):
        self.lead = lead
        self.repl = repl  # dict word -> QScalar

    def __repr__(self):
        return "%r -> ..." % (self.lead,)


def _orient(alg, p):
    lead = max(p.terms, key=lambda w: word_key(alg, w))
    c = p.terms[lead]
    repl = {}
    for w, v in p.terms.items():
        if w != lead:
            repl[w] = -(v / c)
    key = word_key(alg, lead)
    for w in repl:
        if word_key(alg, w) >= key:
            raise RewriteError("relation not orientable: %s" % p)
    return Rule(lead, repl)


class RewriteSystem:
    """Oriented rules over one algebra with a fixed degree-lex order."""

    def __init__(self, alg, rules, max_degree):
        self.alg = alg
        self.max_degree = max_degree
        self.rules = []
        self._by_len = {}
        self.overflow = 0  # words reduced beyond the completion degree
        for r in rules:
            self._add(r)

    def _add(self, rule):
        self.rules.append(rule)
        self._by_len.setdefault(len(rule.lead), {})[rule.lead] = rule

    def find_redex(self, w):
        """Leftmost, then shortest, match of a rule lead inside w."""
        n = len(w)
        for pos in range(n):
            for ln in sorted(self._by_len):
                if pos + ln > n:
                    break
                rule = self._by_len[ln].get(w[pos:pos + ln])
                if rule is not None:
                    return pos, rule
        return None

    def reduce_word(self, w):
        """Rewrite the single word w to normal form; returns {word: coeff}."""
        one = QScalar.one(self.alg.root)
        pending = {w: one}
        done = {}
        while pending:
            w0 = max(pending, key=lambda x: word_key(self.alg, x))
            c0 = pending.pop(w0)
            hit = self.find_redex(w0)
            if hit is None:
                prev = done.get(w0)
                done[w0] = c0 if prev is None else prev + c0
                if not done[w0]:
                    del done[w0]
                continue
            if len(w0) > self.max_degree:
                self.overflow += 1
            pos, rule = hit
            left, right = w0[:pos], w0[pos + len(rule.lead):]
            for mid, cm in rule.repl.items():
                nw = left + mid + right
                cc = c0 * cm
                prev = pending.get(nw)
                pending[nw] = cc if prev is None else prev + cc
                if not pending[nw]:
                    del pending[nw]
        return done

    def nf(self, f):
        if isinstance(f, NCPoly):
            out = {}
            for w, c in f.terms.items():
                for nw, cc in self.reduce_word(w).items():
                    v = cc * c
                    prev = out.get(nw)
                    out[nw] = v if prev is None else prev + v
            return NCPoly(self.alg, out)
        raise TypeError("nf expects an NCPoly")

    def equal(self, f, g):
        return self.nf(f - g).is_zero()

    def is_nf_word(self, w):
        return self.find_redex(w) is None

    def nf_words(self, max_degree, include_unit=False):
        """All irreducible words of degree <= max_degree, sorted."""
        out = [()] if include_unit else []
        layer = [()]
        gens = sorted(self.alg.gens(), key=self.alg.rank)
        for _ in range(max_degree):
            nxt = []
            for w in layer:
                for g in gens:
                    cand = w + (g,)
                    # suffix check: only the new suffixes can contain a redex
                    ok = True
                    for ln, table in self._by_len.items():
                        if ln <= len(cand) and cand[len(cand) - ln:] in table:
                            ok = False
                            break
                    if ok:
                        nxt.append(cand)
            layer = nxt
            out.extend(layer)
        out.sort(key=lambda w: word_key(self.alg, w))
        return out

    # -- persistence ---------------------------------------------------------

    def dump(self):
        lines = ["order deglex row-major tag=%s size=%d root=%d maxdeg=%d"
                 % (self.alg.tag, self.alg.size, self.alg.root,
                    self.max_degree)]
        for r in sorted(self.rules, key=lambda r: word_key(self.alg, r.lead)):
            lead = NCPoly(self.alg, {r.lead: QScalar.one(self.alg.root)})
            repl = NCPoly(self.alg, dict(r.repl))
            lines.append("%s -> %s" % (lead, repl))
        return "\n".join(lines)

    @classmethod
    def load(cls, text, alg=None):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        tag = head[2].split("=")[1]
        size = int(head[3].split("=")[1])
        root = int(head[4].split("=")[1])
        maxdeg = int(head[5].split("=")[1])
        if alg is None:
            alg = Algebra(tag, size, root)
        rules = []
        for ln in lines[1:]:
            lhs, rhs = ln.split("->")
            lead = next(iter(parse_poly(lhs.strip(), alg).terms))
            repl = parse_poly(rhs.strip(), alg).terms
            rules.append(Rule(lead, dict(repl)))
        return cls(alg, rules, maxdeg)


def _overlaps(w1, w2):
    """Proper overlaps (suffix of w1 = prefix of w2) and inclusions of w2
    in w1; yields (left, right) with left + w2 + right = w1-extension."""
    out = []
    for o in range(1, min(len(w1), len(w2))):
        if w1[len(w1) - o:] == w2[:o]:
            # word = w1 + w2[o:]
            out.append(("overlap", o))
    if len(w2) < len(w1):
        for pos in range(len(w1) - len(w2) + 1):
            if w1[pos:pos + len(w2)] == w2:
                out.append(("include", pos))
    return out


def complete(alg, relations, max_degree, max_rules=20000):
    """Resolve all overlap/inclusion ambiguities of combined degree
    <= max_degree; returns a RewriteSystem whose normal forms are canonical
    up to that degree."""
    rules = []
    seen_leads = set()
    for p in relations:
        r = _orient(alg, p)
        if r.lead not in seen_leads:
            seen_leads.add(r.lead)
            rules.append(r)
    system = RewriteSystem(alg, rules, max_degree)

    def spolys(r1, r2):
        out = []
        for kind, o in _overlaps(r1.lead, r2.lead):
            if kind == "overlap":
                word = r1.lead + r2.lead[o:]
                if len(word) > max_degree:
                    continue
                left = r1.lead[:len(r1.lead) - o]
                p1 = NCPoly(alg, {w + r2.lead[o:]: c
                                  for w, c in r1.repl.items()})
                p2 = NCPoly(alg, {left + w: c for w, c in r2.repl.items()})
                out.append(p1 - p2)
            else:
                pos = o
                if len(r1.lead) > max_degree:
                    continue
                left = r1.lead[:pos]
                right = r1.lead[pos + len(r2.lead):]
                p1 = NCPoly(alg, dict(r1.repl))
                p2 = NCPoly(alg, {left + w + right: c
                                  for w, c in r2.repl.items()})
                out.append(p1 - p2)
        return out

    queue = [(i, j) for i in range(len(system.rules))
             for j in range(len(system.rules))]
    qi = 0
    while qi < len(queue):
        i, j = queue[qi]
        qi += 1
        for s in spolys(system.rules[i], system.rules[j]):
            red = system.nf(s)
            if red.is_zero():
                continue
            rule = _orient(alg, red)
            if rule.lead in seen_leads:
                # same lead, necessarily same reduced rule if confluent;
                # re-derive by reducing the difference
                continue
            if len(system.rules) >= max_rules:
                raise RewriteError(
                    "completion budget exceeded: %d rules at degree %d"
                    % (len(system.rules), max_degree))
            seen_leads.add(rule.lead)
            system._add(rule)
            k = len(system.rules) - 1
            for m in range(len(system.rules)):
                queue.append((m, k))
                if m != k:
                    queue.append((k, m))

    # interreduce: normal-form every replacement against the full system
    changed = True
    while changed:
        changed = False
        new_rules = []
        for r in system.rules:
            repl = system.nf(NCPoly(alg, dict(r.repl)))
            if dict(repl.terms) != r.repl:
                changed = True
            new_rules.append(Rule(r.lead, dict(repl.terms)))
        system = RewriteSystem(alg, new_rules, max_degree)
    system.overflow = 0
    return system


def normal_form(f, system):
    return system.nf(f)
