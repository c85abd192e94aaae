"""Exact linear algebra over the scalar field: sparse row reduction to a
canonical reduced echelon form, membership and solving, kernel bases.

Columns are indexed by arbitrary hashable labels with a caller-supplied
total order; the pivot rule is fixed (first nonzero column, lowest row
index), so a SubspaceBasis is canonical and subspace equality is plain
structural comparison.
"""

from .scalars import QScalar

__all__ = ["SubspaceBasis", "rref", "nullspace"]


class SubspaceBasis:
    """Row-reduced basis of a subspace of a finite-dimensional space.

    rows: list of dicts {column label: QScalar}, in echelon order;
    pivots: the pivot label of each row; labels: ordered column labels.
    """

    __slots__ = ("labels", "_pos", "rows", "pivots")

    def __init__(self, labels, rows, pivots):
        self.labels = list(labels)
        self._pos = {lb: i for i, lb in enumerate(self.labels)}
        self.rows = rows
        self.pivots = pivots

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Residue of vec (dict label -> QScalar) modulo the row span."""
        vec = {k: c for k, c in vec.items() if c}
        for piv, row in zip(self.pivots, self.rows):
            c = vec.get(piv)
            if c:
                for lb, v in row.items():
                    nv = vec.get(lb, None)
                    nv = -c * v if nv is None else nv - c * v
                    if nv:
                        vec[lb] = nv
                    else:
                        vec.pop(lb, None)
        return vec

    def contains(self, vec):
        return not self.reduce(vec)

    def coefficients(self, vec):
        """Express vec in the row basis; None if not in the span."""
        vec = {k: c for k, c in vec.items() if c}
        coeffs = []
        for piv, row in zip(self.pivots, self.rows):
            c = vec.get(piv)
            if c:
                coeffs.append(c)
                for lb, v in row.items():
                    nv = vec.get(lb, None)
                    nv = -c * v if nv is None else nv - c * v
                    if nv:
                        vec[lb] = nv
                    else:
                        vec.pop(lb, None)
            else:
                coeffs.append(None)
        if vec:
            return None
        return coeffs

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (self.labels == other.labels and self.pivots == other.pivots
                and self.rows == other.rows)

    def to_json(self):
        return {
            "labels": [str(lb) for lb in self.labels],
            "rows": [{str(lb): str(c) for lb, c in
                      sorted(r.items(), key=lambda t: self._pos[t[0]])}
                     for r in self.rows],
        }


class Echelon:
    """Forward-reduced echelon form for membership and residue computations
    on large exact systems.  Elimination is fraction-free: rows are kept
    with Laurent-polynomial entries (no denominators), rescaled by their
    content after each step, so coefficient growth stays contained."""

    __slots__ = ("labels", "_pos", "rows")

    def __init__(self, labels):
        self.labels = list(labels)
        self._pos = {lb: i for i, lb in enumerate(self.labels)}
        self.rows = {}  # leading position -> row dict (position -> QScalar)

    @property
    def rank(self):
        return len(self.rows)

    def pivot_labels(self):
        return {self.labels[p] for p in self.rows}

    def _to_positions(self, vec):
        pos = self._pos
        return {pos[lb]: c for lb, c in vec.items() if c}

    def _reduce_tail(self, v, track_scale=False):
        """Eliminate all pivot positions from v, fraction-free: at each step
        v := lead(row) * v - v[p] * row.  Returns (residue, scale) where the
        true residue is residue / scale."""
        rows = self.rows
        out = {}
        work = dict(v)
        scale = None
        while work:
            lead = min(work)
            row = rows.get(lead)
            if row is None:
                out[lead] = work.pop(lead)
                continue
            c = work.pop(lead)
            rl = row[lead]
            if not rl.is_one():
                for p in list(work):
                    work[p] = work[p] * rl
                for p in list(out):
                    out[p] = out[p] * rl
                scale = rl if scale is None else scale * rl
            for p, rv in row.items():
                if p == lead:
                    continue
                cur = work.get(p)
                nv = -c * rv if cur is None else cur - c * rv
                if nv:
                    work[p] = nv
                else:
                    work.pop(p, None)
        return out, scale

    def reduce(self, vec):
        """True residue of vec (over labels) modulo the span; supported on
        non-pivot labels only."""
        v, scale = self._reduce_tail(self._to_positions(vec))
        if scale is not None and v:
            inv = scale.inverse()
            v = {p: c * inv for p, c in v.items()}
        return {self.labels[p]: c for p, c in v.items()}

    def insert(self, vec):
        """Reduce and insert; returns True if the rank grew."""
        v, _ = self._reduce_tail(self._to_positions(vec))
        if not v:
            return False
        v = _strip_content(v)
        self.rows[min(v)] = v
        return True

    def contains(self, vec):
        v, _ = self._reduce_tail(self._to_positions(vec))
        return not v


def _strip_content(v):
    """Divide a polynomial-entried row by the gcd of its entries (including
    the common power of t and rational content)."""
    from .scalars import QScalar, _pgcd
    vals = list(v.values())
    root = vals[0].root
    # common denominator clearing first (entries should normally be poly)
    dens = {c.den for c in vals if len(c.den) > 1}
    if dens:
        mult = None
        for den in dens:
            d = QScalar(0, den, (den[0],), root)
            mult = d if mult is None else mult * d
        v = {p: c * mult for p, c in v.items()}
        vals = list(v.values())
    g = vals[0].num
    for c in vals[1:]:
        if len(g) <= 1:
            break
        g = _pgcd(g, c.num)
    shift = min(c.shift for c in vals)
    if len(g) <= 1 and shift == 0:
        return v
    from fractions import Fraction
    div = QScalar(shift, g if len(g) > 1 else (Fraction(1),),
                  (Fraction(1),), root)
    inv = div.inverse()
    return {p: c * inv for p, c in v.items()}


def rref(labels, vectors):
    """Reduced echelon form of the span of `vectors` (dicts label->QScalar).

    Pivot rule: scan columns in label order; among unused rows take the
    first (lowest index) with a nonzero entry in that column.
    """
    pos = {lb: i for i, lb in enumerate(labels)}
    work = []
    for v in vectors:
        v = {k: c for k, c in v.items() if c}
        if v:
            work.append(v)
    rows, pivots = [], []
    used = [False] * len(work)
    for lb in labels:
        sel = None
        for i, v in enumerate(work):
            if not used[i] and v.get(lb):
                sel = i
                break
        if sel is None:
            continue
        used[sel] = True
        row = work[sel]
        inv = row[lb].inverse()
        row = {k: c * inv for k, c in row.items()}
        # eliminate from all other rows (full reduction)
        for i, v in enumerate(work):
            if i != sel and not used[i]:
                c = v.get(lb)
                if c:
                    for k, rv in row.items():
                        nv = v.get(k, None)
                        nv = -c * rv if nv is None else nv - c * rv
                        if nv:
                            v[k] = nv
                        else:
                            v.pop(k, None)
        for prow, ppiv in zip(rows, pivots):
            c = prow.get(lb)
            if c:
                for k, rv in row.items():
                    nv = prow.get(k, None)
                    nv = -c * rv if nv is None else nv - c * rv
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        rows.append(row)
        pivots.append(lb)
    order = sorted(range(len(rows)), key=lambda i: pos[pivots[i]])
    return SubspaceBasis(labels, [rows[i] for i in order],
                         [pivots[i] for i in order])


def nullspace(row_labels, col_labels, entries):
    """Kernel of the linear map sending basis element r (in row_labels) to
    the vector entries[r] over col_labels: returns vectors over row_labels
    with sum_r c_r entries[r] = 0, as a canonical list.

    Back-substitution through the RREF of the (row x col) matrix, one basis
    vector per free row label.
    """
    # Gaussian elimination treating row_labels as unknown coefficients:
    # build the transposed system: columns = row_labels.
    vecs = []
    for cl in col_labels:
        v = {}
        for rl in row_labels:
            c = entries[rl].get(cl)
            if c:
                v[rl] = c
        vecs.append(v)
    basis = rref(row_labels, vecs)
    pivset = set(basis.pivots)
    free = [rl for rl in row_labels if rl not in pivset]
    out = []
    for f in free:
        vec = {f: None}
        sol = {f: _one_like(entries)}
        for piv, row in zip(basis.pivots, basis.rows):
            c = row.get(f)
            if c:
                sol[piv] = -c
        out.append(sol)
    return out


def _one_like(entries):
    for v in entries.values():
        for c in v.values():
            return QScalar.one(c.root)
    raise ValueError("cannot infer scalar field from empty system")
