"""Sparse linear algebra over the prime field F_p.

Vectors are dicts {index: coeff} with coeffs in 1..p-1 (zero entries are
never stored). Linear operators are dicts {col_index: image_vector}, i.e.
column form; missing columns act as zero.
"""


def fp_inv(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError("no inverse of 0 mod %d" % p)
    return pow(a, -1, p)


def addmul(acc, vec, c, p):
    """acc += c * vec, in place. Returns acc."""
    c %= p
    if c == 0:
        return acc
    for k, v in vec.items():
        n = (acc.get(k, 0) + c * v) % p
        if n:
            acc[k] = n
        elif k in acc:
            del acc[k]
    return acc


def scale(vec, c, p):
    c %= p
    if c == 0:
        return {}
    if c == 1:
        return dict(vec)
    return {k: (c * v) % p for k, v in vec.items()}


def apply_columns(op, vec, p):
    """Image of vec under the operator given in column form."""
    out = {}
    for j, c in vec.items():
        col = op.get(j)
        if col:
            addmul(out, col, c, p)
    return out


class Echelon:
    """Row space in reduced row echelon form, built incrementally.

    rows maps pivot column -> row vector; every row has coefficient 1 at
    its pivot and 0 at every other pivot, so reduce() lands in canonical
    complement coordinates.
    """

    def __init__(self, p):
        self.p = p
        self.rows = {}

    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec):
        p = self.p
        v = dict(vec)
        # each subtraction only touches non-pivot columns, one pass is enough
        for q in [k for k in v if k in self.rows]:
            c = v.get(q, 0)
            if c:
                addmul(v, self.rows[q], -c, p)
        return v

    def insert(self, vec):
        """Add vec to the row space. Returns the new normalized row if the
        rank grew, else None."""
        p = self.p
        v = self.reduce(vec)
        if not v:
            return None
        j = min(v)
        cinv = fp_inv(v[j], p)
        if cinv != 1:
            v = {k: (cinv * c) % p for k, c in v.items()}
        for row in self.rows.values():
            c = row.get(j)
            if c:
                addmul(row, v, -c, p)
        self.rows[j] = v
        return v

    def contains(self, vec):
        return not self.reduce(vec)

    def basis(self):
        return [self.rows[j] for j in sorted(self.rows)]


def nullspace(equations, ncols, p):
    """Kernel basis for a system of sparse equation rows over columns
    0..ncols-1. Basis vectors are keyed to free columns in ascending order
    and returned in RREF-dual form (exact, canonical)."""
    ech = Echelon(p)
    for eq in equations:
        ech.insert(eq)
    pivots = ech.rows
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: 1}
        for q, row in pivots.items():
            c = row.get(f)
            if c:
                v[q] = (-c) % p
        out.append(v)
    return out


def joint_kernel(ops, dim, p):
    """Common kernel of a list of column-form operators on F_p^dim."""
    eqs = {}
    for t, op in enumerate(ops):
        for j, col in op.items():
            for i, c in col.items():
                eqs.setdefault((t, i), {})[j] = c
    return nullspace(eqs.values(), dim, p)


def span_closure(seeds, ops, p, dim=None):
    """Smallest subspace containing seeds and stable under the column-form
    operators. Early exit when the rank hits dim."""
    ech = Echelon(p)
    queue = []
    for s in seeds:
        r = ech.insert(s)
        if r is not None:
            queue.append(r)
    while queue:
        if dim is not None and ech.rank() >= dim:
            break
        v = queue.pop()
        for op in ops:
            w = apply_columns(op, v, p)
            r = ech.insert(w)
            if r is not None:
                queue.append(r)
    return ech
