"""Finite-dimensional induced modules and their irreducibility.

The central object is the induced module on the basis y^a (tensor) l:
exponent tuples over the fixed u_J^- order times a base-module index.
The base is either the one-dimensional weight space (when the Levi part
of the weight vanishes mod p) or the simple head of the Levi's own
restricted highest-weight module, computed here as an explicit quotient
with action tables.

Irreducibility is decided exactly: any nonzero submodule contains a
nonzero vector killed by all active raising operators (repeated raising
strictly lowers the total drop height, which is bounded), and splitting
such a vector into torus eigencomponents keeps it in the submodule.  So
the module is irreducible iff every line in every per-weight-class
joint kernel of the raising operators generates.  Line counts are
capped; hitting the cap raises instead of guessing.
"""

import itertools
import random

from .fplin import Echelon, addmul, apply_columns, nullspace, span_closure
from .chevalley import PChar
from .pbw import Straightener, fix_order
from .roots import levi_datum


class CapExceeded(Exception):
    """A requested construction or search exceeds its size bound."""


# ---- base modules for the induction ----


class TrivialLevi:
    """One-dimensional base: all Levi root vectors act by zero, the
    torus through the fixed weight.  This is the simple head exactly
    when every Levi coordinate of the weight is 0 mod p."""

    def __init__(self, lam):
        self.lam = tuple(int(x) for x in lam)
        self.dim = 1
        self.high = 0

    def weight(self, l):
        return self.lam

    def droproot(self, l):
        return (0,) * len(self.lam)

    def act(self, key, l):
        return {}


class TableLevi:
    """Base module with explicit action tables on a finite basis."""

    def __init__(self, weights, drops, tables, high):
        self.weights = list(weights)
        self.drops = list(drops)
        self.tables = tables
        self.dim = len(self.weights)
        self.high = high

    def weight(self, l):
        return self.weights[l]

    def droproot(self, l):
        return self.drops[l]

    def act(self, key, l):
        return self.tables.get(key, {}).get(l, {})


# ---- module containers ----


class ModuleBase:
    def op_matrix(self, key):
        cols = self._cols.get(key)
        if cols is None:
            cols = {}
            for b in range(self.dim):
                img = self.act_basis(key, b)
                if img:
                    cols[b] = img
            self._cols[key] = cols
        return cols

    def xy_ops(self):
        ops = []
        for i in self.active:
            g = self.rs.simple(i)
            ops.append(self.op_matrix(("x", g)))
            ops.append(self.op_matrix(("y", g)))
        return ops

    def raising_ops(self):
        return [self.op_matrix(("x", self.rs.simple(i))) for i in self.active]

    def weight_classes(self):
        """Basis indices grouped by weight mod p, then by drop mod p."""
        if self._classes is None:
            classes = {}
            for b in range(self.dim):
                wt = tuple(v % self.p for v in self.weight_int(b))
                kap = tuple(v % self.p for v in self.drop_int(b))
                classes.setdefault(wt, {}).setdefault(kap, []).append(b)
            self._classes = classes
        return self._classes

    def chi_of(self, g):
        if sum(g) == 1:
            return self.chi.chi_simple(g.index(1) + 1)
        return 0


class InducedModule(ModuleBase):
    """Induced module on basis y^a (tensor) l, indexed lexicographically
    in the exponent tuple, then by base index."""

    def __init__(self, alg, chi, st, active=None):
        self.alg = alg
        self.rs = alg.rs
        self.p = chi.p
        self.chi = chi
        self.st = st
        self.levi = st.levi
        self.m = st.m
        self._exps = list(itertools.product(range(self.p), repeat=self.m))
        self._rank = {e: i for i, e in enumerate(self._exps)}
        self.dim = len(self._exps) * self.levi.dim
        if active is None:
            active = tuple(range(1, self.rs.n + 1))
        self.active = tuple(active)
        self.high = self.index_of((0,) * self.m, self.levi.high)
        self.lam = st.weight_int((0,) * self.m, self.levi.high)
        self._cols = {}
        self._classes = None

    def index_of(self, exps, l):
        return self._rank[exps] * self.levi.dim + l

    def vector_at(self, b):
        return self._exps[b // self.levi.dim], b % self.levi.dim

    def act_basis(self, key, b):
        exps, l = self.vector_at(b)
        return {
            self.index_of(e, l2): c for (e, l2), c in self.st.act(key, exps, l).items()
        }

    def weight_int(self, b):
        exps, l = self.vector_at(b)
        return self.st.weight_int(exps, l)

    def drop_int(self, b):
        exps, l = self.vector_at(b)
        return self.st.drop_int(exps, l)


class QuotientModule(ModuleBase):
    """Quotient by an action-stable subspace, on the canonical
    complement coordinates of the subspace's reduced row form."""

    def __init__(self, parent, sub, check=True):
        self.parent = parent
        self.alg = parent.alg
        self.rs = parent.rs
        self.p = parent.p
        self.chi = parent.chi
        self.active = parent.active
        self.sub = sub
        pivots = set(sub.pivots())
        self.keep = [c for c in range(parent.dim) if c not in pivots]
        self.pos = {c: i for i, c in enumerate(self.keep)}
        self.dim = len(self.keep)
        self.high = self.pos.get(parent.high)
        self.lam = parent.lam
        self._cols = {}
        self._classes = None
        if check:
            self._check_stable()

    def _check_stable(self):
        for row in self.sub.basis():
            for op in self.parent.xy_ops():
                img = apply_columns(op, row, self.p)
                if self.sub.reduce(img):
                    raise AssertionError("subspace is not action-stable")

    def project(self, vec):
        red = self.sub.reduce(vec)
        return {self.pos[c]: v for c, v in red.items()}

    def lift(self, vec):
        return {self.keep[b]: c for b, c in vec.items()}

    def act_basis(self, key, b):
        return self.project(self.parent.act_basis(key, self.keep[b]))

    def weight_int(self, b):
        return self.parent.weight_int(self.keep[b])

    def drop_int(self, b):
        return self.parent.drop_int(self.keep[b])


# ---- builders ----


def build_levi_simple(alg, p, I, lam):
    """Simple head of the Levi's restricted highest-weight module at
    lam, as a base module for the parabolic induction."""
    rs = alg.rs
    ld = levi_datum(rs, I)
    lam = tuple(int(x) for x in lam)
    if all(lam[j - 1] % p == 0 for j in ld.J):
        return TrivialLevi(lam)
    chi0 = PChar(p, ())
    st = Straightener(alg, chi0, ld.levi_roots, TrivialLevi(lam))
    verma = InducedModule(alg, chi0, st, active=ld.J)
    rad = radical(verma)
    q = QuotientModule(verma, rad, check=False)
    tables = {}
    for g in ld.levi_roots:
        for key in (("x", g), ("y", g)):
            tables[key] = {l: q.act_basis(key, l) for l in range(q.dim)}
    weights = [q.weight_int(l) for l in range(q.dim)]
    drops = [q.drop_int(l) for l in range(q.dim)]
    if q.high is None:
        raise AssertionError("highest vector lost in the head quotient")
    return TableLevi(weights, drops, tables, q.high)


def build_parabolic_baby_verma(alg, chi, lam, cap=50000, order=None, levi=None):
    """Module induced from the Levi simple head at lam, with chi of
    standard Levi form supported on I."""
    rs = alg.rs
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.n:
        raise ValueError("weight must have %d coordinates" % rs.n)
    if order is None:
        order = fix_order(rs, chi.I)
    if levi is None:
        levi = build_levi_simple(alg, chi.p, chi.I, lam)
    dim = chi.p ** len(order) * levi.dim
    if dim > cap:
        raise CapExceeded("dimension %d exceeds cap %d" % (dim, cap))
    st = Straightener(alg, chi, order, levi)
    return InducedModule(alg, chi, st)


def build_baby_verma(alg, chi, lam, cap=50000, order=None):
    """Module induced from the one-dimensional weight space at lam over
    the full Borel, for any chi of standard Levi form."""
    rs = alg.rs
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.n:
        raise ValueError("weight must have %d coordinates" % rs.n)
    if order is None:
        order = tuple(sorted(rs.roots, key=lambda g: (sum(g), g)))
    if chi.p ** len(order) > cap:
        raise CapExceeded(
            "dimension %d exceeds cap %d" % (chi.p ** len(order), cap)
        )
    st = Straightener(alg, chi, order, TrivialLevi(lam))
    return InducedModule(alg, chi, st)


# ---- irreducibility ----


def _projective_coeffs(p, d):
    for t in range(d):
        head = (0,) * t + (1,)
        for tail in itertools.product(range(p), repeat=d - t - 1):
            yield head + tail


def maximal_vectors(mod):
    """Joint kernel of the active raising operators, split by
    (weight mod p, drop mod p) component.  Returns a dict
    (wt, comp) -> list of kernel basis vectors in global coordinates."""
    p = mod.p
    ops = mod.raising_ops()
    out = {}
    for wt, groups in mod.weight_classes().items():
        for kap, idxs in groups.items():
            pos = {c: i for i, c in enumerate(idxs)}
            eqs = {}
            for t, op in enumerate(ops):
                for c in idxs:
                    col = op.get(c)
                    if not col:
                        continue
                    for r, val in col.items():
                        eqs.setdefault((t, r), {})[pos[c]] = val
            vecs = nullspace(eqs.values(), len(idxs), p)
            if vecs:
                out[(wt, kap)] = [{idxs[i]: c for i, c in v.items()} for v in vecs]
    return out


def generates(mod, vec):
    return span_closure([vec], mod.xy_ops(), mod.p, dim=mod.dim).rank() == mod.dim


class IrreducibilityReport:
    def __init__(self, irreducible, mod, profile, witness, witness_key, lines):
        self.irreducible = irreducible
        self.dim = mod.dim
        self.p = mod.p
        self.lam = mod.lam
        self.profile = profile
        self.witness = witness
        self.witness_key = witness_key
        self.lines_checked = lines

    def to_dict(self):
        return {
            "irreducible": self.irreducible,
            "dim": self.dim,
            "p": self.p,
            "lambda": list(self.lam),
            "profile": [
                {"weight": list(wt), "component": list(kap), "count": c}
                for (wt, kap), c in sorted(self.profile.items())
            ],
            "witness": (
                None
                if self.witness is None
                else {str(k): v for k, v in sorted(self.witness.items())}
            ),
            "lines_checked": self.lines_checked,
        }


def is_irreducible(mod, cap=10000):
    """Exact irreducibility decision; raises CapExceeded if the number
    of kernel lines to test exceeds cap."""
    p = mod.p
    mv = maximal_vectors(mod)
    profile = {k: len(v) for k, v in mv.items()}
    by_wt = {}
    for (wt, kap), vecs in mv.items():
        by_wt.setdefault(wt, []).extend(vecs)
    total = 0
    for vecs in by_wt.values():
        total += (p ** len(vecs) - 1) // (p - 1)
    if total > cap:
        raise CapExceeded("%d kernel lines exceed cap %d" % (total, cap))
    ops = mod.xy_ops()
    lines = 0
    for wt in sorted(by_wt):
        vecs = by_wt[wt]
        for coeffs in _projective_coeffs(p, len(vecs)):
            lines += 1
            v = {}
            for c, basev in zip(coeffs, vecs):
                addmul(v, basev, c, p)
            if span_closure([v], ops, p, dim=mod.dim).rank() < mod.dim:
                return IrreducibilityReport(False, mod, profile, v, wt, lines)
    return IrreducibilityReport(True, mod, profile, None, None, lines)


def radical(mod, cap=10000):
    """The unique maximal submodule, as an echelonized row space in
    global coordinates.  Relies on the head being simple (every vector
    outside the radical generates), which holds for the highest-weight
    modules built here."""
    ech = Echelon(mod.p)
    for v in _radical_vectors(mod, cap):
        ech.insert(v)
    return ech


def _radical_vectors(mod, cap):
    p = mod.p
    mv = maximal_vectors(mod)
    by_wt = {}
    for (wt, kap), vecs in mv.items():
        by_wt.setdefault(wt, []).extend(vecs)
    total = 0
    for vecs in by_wt.values():
        total += (p ** len(vecs) - 1) // (p - 1)
    if total > cap:
        raise CapExceeded("%d kernel lines exceed cap %d" % (total, cap))
    ops = mod.xy_ops()
    bad = []
    for wt in sorted(by_wt):
        vecs = by_wt[wt]
        for coeffs in _projective_coeffs(p, len(vecs)):
            v = {}
            for c, basev in zip(coeffs, vecs):
                addmul(v, basev, c, p)
            if span_closure([v], ops, p, dim=mod.dim).rank() < mod.dim:
                bad.append(v)
    if not bad:
        return []
    sub = span_closure(bad, ops, p)
    q = QuotientModule(mod, sub, check=False)
    out = [dict(r) for r in sub.basis()]
    for v in _radical_vectors(q, cap):
        out.append(q.lift(v))
    return out


def head(mod, cap=10000):
    return QuotientModule(mod, radical(mod, cap), check=False)


# ---- representation checks ----


def _basis_keys(alg):
    return list(alg.basis)


def verify_commutators(mod, exhaustive_limit=700, samples=10000, seed=0):
    """Check rho([a,b]) = rho(a)rho(b) - rho(b)rho(a) on basis vectors.
    Exhaustive over all generator pairs and all basis vectors up to
    exhaustive_limit, sampled triples beyond."""
    p = mod.p
    keys = _basis_keys(mod.alg)
    if mod.dim <= exhaustive_limit:
        triples = (
            (a, b, c)
            for ai, a in enumerate(keys)
            for b in keys[ai + 1 :]
            for c in range(mod.dim)
        )
    else:
        rng = random.Random(seed)
        triples = (
            (keys[rng.randrange(len(keys))], keys[rng.randrange(len(keys))],
             rng.randrange(mod.dim))
            for _ in range(samples)
        )
    for a, b, c in triples:
        vb = mod.act_basis(b, c)
        lhs = {}
        for b2, v in vb.items():
            addmul(lhs, mod.act_basis(a, b2), v, p)
        va = mod.act_basis(a, c)
        for b2, v in va.items():
            addmul(lhs, mod.act_basis(b, b2), -v, p)
        rhs = {}
        for k, cf in mod.alg.bracket(a, b).items():
            addmul(rhs, mod.act_basis(k, c), cf, p)
        if lhs != rhs:
            raise AssertionError(
                "commutator mismatch at (%r, %r) on basis %d" % (a, b, c)
            )
    return True


def verify_frobenius(mod, sample_limit=1500, seed=0):
    """Check the p-th power laws on the module: x_g^p = 0,
    y_g^p = chi(y_g)^p, h_i^p = h_i as operators."""
    p = mod.p
    if mod.dim <= sample_limit:
        idxs = range(mod.dim)
    else:
        rng = random.Random(seed)
        idxs = sorted(rng.sample(range(mod.dim), sample_limit))
    kinds = []
    for g in mod.rs.roots:
        kinds.append((("x", g), 0))
        kinds.append((("y", g), pow(mod.chi_of(g), p, p)))
    for key, scalar in kinds:
        op = mod.op_matrix(key)
        for b in idxs:
            v = {b: 1}
            for _ in range(p):
                v = apply_columns(op, v, p)
            want = {b: scalar} if scalar else {}
            if v != want:
                raise AssertionError(
                    "p-th power law fails for %r at basis %d" % (key, b)
                )
    for i in range(1, mod.rs.n + 1):
        op = mod.op_matrix(("h", i))
        for b in idxs:
            v = {b: 1}
            for _ in range(p):
                v = apply_columns(op, v, p)
            if v != op.get(b, {}):
                raise AssertionError("p-th power law fails for h%d at %d" % (i, b))
    return True
