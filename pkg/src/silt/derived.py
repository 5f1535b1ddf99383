"""Bounded complexes of projectives and maps up to homotopy.

Objects of the bounded derived category of a Dynkin path algebra are
presented as bounded complexes of projective representations; every object
decomposes into shifted module stalks M[j], and a stalk sum is the bookkeeping
type for such decompositions.  Conventions:

* cohomological indexing, differentials raise degree, d o d = 0;
* M[j] has its cohomology in degree -j, so the two-term projective
  resolution of a module M sits in degrees -j-1 and -j;
* (X[1])^n = X^{n+1} with negated differential; the mapping cone of
  f: X -> Y has C^n = X^{n+1} (+) Y^n with differential
  [[-d_X, 0], [f, d_Y]].

Hom spaces are chain maps modulo null-homotopic maps, computed by exact
elimination; for stalks this must agree with the dimension read off module
Hom/Ext, which downstream checks verify in bulk.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg as la
from . import reps as rp
from .indecs import IndecTable, decompose
from .linalg import QM
from .quiver import Quiver
from .reps import Rep, RepMor


class StalkSum:
    """A formal multiset of shifted indecomposables [(id, shift), ...].

    Entries are kept sorted by (shift, id); multiplicity is by repetition.
    """

    __slots__ = ("entries",)

    def __init__(self, pairs):
        self.entries = tuple(sorted(((str(i), int(s)) for (i, s) in pairs),
                                    key=lambda p: (p[1], p[0])))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, StalkSum) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        return "StalkSum(" + ", ".join(self.format_entry(e) for e in self.entries) + ")"

    @staticmethod
    def format_entry(pair) -> str:
        i, s = pair
        return i if s == 0 else f"{i}[{s}]"

    def pretty(self) -> str:
        return "{" + ", ".join(self.format_entry(e) for e in self.entries) + "}"

    def add(self, pair) -> "StalkSum":
        return StalkSum(self.entries + ((pair[0], pair[1]),))

    def remove_at(self, idx: int) -> "StalkSum":
        return StalkSum(self.entries[:idx] + self.entries[idx + 1:])

    def multiplicity(self, pair) -> int:
        return sum(1 for e in self.entries if e == tuple(pair))

    def distinct(self) -> list:
        seen = []
        for e in self.entries:
            if e not in seen:
                seen.append(e)
        return seen

    def is_basic(self) -> bool:
        return len(self.entries) == len(set(self.entries))

    def shifted(self, k: int) -> "StalkSum":
        return StalkSum([(i, s + k) for (i, s) in self.entries])

    def shifts(self) -> list:
        return [s for (_, s) in self.entries]

    def to_json(self) -> list:
        out = []
        for (i, s) in self.distinct():
            out.append({"id": i, "shift": s, "mult": self.multiplicity((i, s))})
        return out

    @classmethod
    def from_json(cls, doc) -> "StalkSum":
        pairs = []
        for item in doc:
            pairs.extend([(item["id"], item["shift"])] * item.get("mult", 1))
        return cls(pairs)


class Complex:
    """A bounded complex of (projective) representations."""

    __slots__ = ("quiver", "terms", "diffs", "stalk_key")

    def __init__(self, quiver: Quiver, terms: dict, diffs: dict,
                 stalk_key=None, check: bool = True):
        self.quiver = quiver
        self.terms = {i: t for i, t in terms.items() if not t.is_zero()}
        self.diffs = {}
        for i, d in diffs.items():
            if i in self.terms and (i + 1) in self.terms:
                self.diffs[i] = d
        self.stalk_key = stalk_key
        if check:
            for i, d in self.diffs.items():
                if d.src is not self.terms[i] and d.src != self.terms[i]:
                    raise ValueError("differential source mismatch")
                if d.tgt is not self.terms[i + 1] and d.tgt != self.terms[i + 1]:
                    raise ValueError("differential target mismatch")
                nxt = self.diffs.get(i + 1)
                if nxt is not None and not nxt.compose(d).is_zero():
                    raise ValueError("d o d != 0")

    @classmethod
    def zero(cls, quiver: Quiver) -> "Complex":
        return cls(quiver, {}, {}, check=False)

    def degrees(self) -> list:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def term(self, i: int) -> Rep:
        t = self.terms.get(i)
        return t if t is not None else Rep.zero(self.quiver)

    def diff(self, i: int) -> Optional[RepMor]:
        return self.diffs.get(i)

    def total_dim(self) -> int:
        return sum(t.total_dim() for t in self.terms.values())

    def shifted(self, k: int) -> "Complex":
        """The k-fold shift: term n becomes old term n+k, sign (-1)^k."""
        sign = 1 if k % 2 == 0 else -1
        terms = {i - k: t for i, t in self.terms.items()}
        diffs = {}
        for i, d in self.diffs.items():
            diffs[i - k] = d if sign == 1 else -d
        key = None
        if self.stalk_key is not None:
            key = (self.stalk_key[0], self.stalk_key[1] + k)
        return Complex(self.quiver, terms, diffs, stalk_key=key, check=False)


class ChainMap:
    """A degreewise morphism of complexes commuting with the differentials."""

    __slots__ = ("src", "tgt", "comps")

    def __init__(self, src: Complex, tgt: Complex, comps: dict, check: bool = True):
        self.src = src
        self.tgt = tgt
        clean = {}
        for i, c in comps.items():
            if i in src.terms and i in tgt.terms and not c.is_zero():
                clean[i] = c
        self.comps = clean
        if check:
            self._check()

    def _check(self) -> None:
        for i in set(self.src.terms) | set(self.tgt.terms):
            f_i = self.comp(i)
            f_n = self.comp(i + 1)
            dx = self.src.diff(i)
            dy = self.tgt.diff(i)
            # f^{i+1} o d_x = d_y o f^i, with absent pieces read as zero
            lhs = f_n.compose(dx) if (dx is not None) else None
            rhs = dy.compose(f_i) if (dy is not None) else None
            if lhs is None and rhs is None:
                continue
            if lhs is None:
                if not rhs.is_zero():
                    raise ValueError("chain condition fails")
            elif rhs is None:
                if not lhs.is_zero():
                    raise ValueError("chain condition fails")
            elif lhs.comps != rhs.comps:
                raise ValueError("chain condition fails")

    def comp(self, i: int) -> RepMor:
        c = self.comps.get(i)
        if c is not None:
            return c
        return RepMor.zero(self.src.term(i), self.tgt.term(i))

    @classmethod
    def zero(cls, src: Complex, tgt: Complex) -> "ChainMap":
        return cls(src, tgt, {}, check=False)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps.values())

    def compose(self, first: "ChainMap") -> "ChainMap":
        if first.tgt is not self.src and first.tgt.terms != self.src.terms:
            raise ValueError("chain map composition mismatch")
        comps = {}
        for i in set(first.comps) & set(self.comps):
            comps[i] = self.comps[i].compose(first.comps[i])
        return ChainMap(first.src, self.tgt, comps, check=False)

    def __add__(self, other: "ChainMap") -> "ChainMap":
        comps = {}
        for i in set(self.comps) | set(other.comps):
            comps[i] = self.comp(i) + other.comp(i)
        return ChainMap(self.src, self.tgt, comps, check=False)

    def __neg__(self) -> "ChainMap":
        return ChainMap(self.src, self.tgt, {i: -c for i, c in self.comps.items()},
                        check=False)

    def scaled(self, c) -> "ChainMap":
        return ChainMap(self.src, self.tgt,
                        {i: m.scaled(c) for i, m in self.comps.items()}, check=False)

    def shifted(self, k: int) -> "ChainMap":
        return ChainMap(self.src.shifted(k), self.tgt.shifted(k),
                        {i - k: c for i, c in self.comps.items()}, check=False)


def direct_sum_complexes(parts: Sequence[Complex], quiver: Quiver) -> tuple:
    """Direct sum with per-part inclusion/projection chain maps."""
    if not parts:
        z = Complex.zero(quiver)
        return z, [], []
    degrees = sorted({i for p in parts for i in p.terms})
    term_sums = {}
    vertex_incls = {}
    vertex_projs = {}
    for i in degrees:
        reps = [p.term(i) for p in parts]
        total, incls, projs = rp.direct_sum(reps, quiver)
        term_sums[i] = total
        vertex_incls[i] = incls
        vertex_projs[i] = projs
    diffs = {}
    for i in degrees:
        if i + 1 not in term_sums:
            continue
        acc = RepMor.zero(term_sums[i], term_sums[i + 1])
        nonzero = False
        for k, p in enumerate(parts):
            d = p.diff(i)
            if d is not None:
                acc = acc + vertex_incls[i + 1][k].compose(d).compose(vertex_projs[i][k])
                nonzero = True
        if nonzero:
            diffs[i] = acc
    total_cx = Complex(quiver, term_sums, diffs, check=False)
    incl_maps = []
    proj_maps = []
    for k, p in enumerate(parts):
        incl_maps.append(ChainMap(p, total_cx,
                                  {i: vertex_incls[i][k] for i in p.terms}, check=False))
        proj_maps.append(ChainMap(total_cx, p,
                                  {i: vertex_projs[i][k] for i in p.terms}, check=False))
    return total_cx, incl_maps, proj_maps


def cone(f: ChainMap) -> tuple:
    """Mapping cone of f: X -> Y.

    Returns (C, incl, proj) where incl: Y -> C and proj: C -> X[1] are the
    canonical triangle maps around X -> Y -> C -> X[1].
    """
    x, y = f.src, f.tgt
    q = x.quiver
    x1 = x.shifted(1)
    degrees = sorted(set(x1.terms) | set(y.terms))
    terms = {}
    incl_x = {}
    incl_y = {}
    proj_x = {}
    proj_y = {}
    for i in degrees:
        total, incls, projs = rp.direct_sum([x1.term(i), y.term(i)], q)
        terms[i] = total
        incl_x[i], incl_y[i] = incls
        proj_x[i], proj_y[i] = projs
    diffs = {}
    for i in degrees:
        if i + 1 not in terms:
            continue
        acc = RepMor.zero(terms[i], terms[i + 1])
        dx1 = x1.diff(i)
        if dx1 is not None:
            acc = acc + incl_x[i + 1].compose(dx1).compose(proj_x[i])
        dy = y.diff(i)
        if dy is not None:
            acc = acc + incl_y[i + 1].compose(dy).compose(proj_y[i])
        fi = f.comps.get(i + 1)
        if fi is not None and (i + 1) in x.terms:
            # the degree i+1 component of f lands in C^i through X^{i+1}
            acc = acc + incl_y[i + 1].compose(fi).compose(proj_x[i])
        if not acc.is_zero():
            diffs[i] = acc
    c = Complex(q, terms, diffs)
    incl = ChainMap(y, c, {i: incl_y[i] for i in y.terms}, check=False)
    proj = ChainMap(c, x1, {i: proj_x[i] for i in terms if i in x1.terms}, check=False)
    return c, incl, proj


# ---------------------------------------------------------------------------
# hom up to homotopy

class _Layout:
    """Unknown layout for per-degree vertex blocks of maps X^i -> Y^{i+off}."""

    def __init__(self, x: Complex, y: Complex, off: int):
        self.blocks = {}
        self.total = 0
        q = x.quiver
        for i in sorted(x.terms):
            if (i + off) not in y.terms:
                continue
            xt, yt = x.terms[i], y.terms[i + off]
            for v in range(q.n):
                if xt.dims[v] and yt.dims[v]:
                    self.blocks[(i, v)] = (self.total, yt.dims[v], xt.dims[v])
                    self.total += yt.dims[v] * xt.dims[v]

    def offset(self, i: int, v: int):
        return self.blocks.get((i, v))

    def pack(self, comps: dict, x: Complex, y: Complex, off: int) -> list:
        vec = [Fraction(0)] * self.total
        for (i, v), (o, rdim, cdim) in self.blocks.items():
            mor = comps.get(i)
            if mor is None:
                continue
            mat = mor.comps[v]
            for r in range(rdim):
                for c in range(cdim):
                    vec[o + r * cdim + c] = mat.rows[r][c]
        return vec

    def unpack(self, vec, x: Complex, y: Complex, off: int) -> dict:
        comps = {}
        for i in sorted(x.terms):
            if (i + off) not in y.terms:
                continue
            xt, yt = x.terms[i], y.terms[i + off]
            mats = []
            for v in range(x.quiver.n):
                blk = self.blocks.get((i, v))
                if blk is None:
                    mats.append(QM.zeros(yt.dims[v], xt.dims[v]))
                else:
                    o, rdim, cdim = blk
                    mats.append(QM(rdim, cdim,
                                   [vec[o + r * cdim:o + (r + 1) * cdim]
                                    for r in range(rdim)]))
            comps[i] = RepMor(xt, yt, mats, check=False)
        return comps


def _intertwiner_rows(layout: _Layout, x: Complex, y: Complex, off: int) -> list:
    """Rows forcing every component X^i -> Y^{i+off} to be a RepMor."""
    q = x.quiver
    rows = []
    for i in sorted(x.terms):
        if (i + off) not in y.terms:
            continue
        xt, yt = x.terms[i], y.terms[i + off]
        for aidx, (u, w) in enumerate(q.arrows):
            ma, na = xt.maps[aidx], yt.maps[aidx]
            bw = layout.offset(i, w)
            bu = layout.offset(i, u)
            for r in range(yt.dims[w]):
                for c in range(xt.dims[u]):
                    row = [Fraction(0)] * layout.total
                    used = False
                    if bw is not None:
                        o, rd, cd = bw
                        for k in range(xt.dims[w]):
                            coef = ma.rows[k][c]
                            if coef:
                                row[o + r * cd + k] += coef
                                used = True
                    if bu is not None:
                        o, rd, cd = bu
                        for k in range(yt.dims[u]):
                            coef = na.rows[r][k]
                            if coef:
                                row[o + k * cd + c] -= coef
                                used = True
                    if used:
                        rows.append(row)
    return rows


def _chain_rows(layout: _Layout, x: Complex, y: Complex) -> list:
    """Rows forcing f^{i+1} d_x = d_y f^i (off = 0 layout)."""
    q = x.quiver
    rows = []
    for i in sorted(x.terms):
        if (i + 1) not in y.terms:
            continue
        xt = x.terms[i]
        yt1 = y.terms[i + 1]
        dx = x.diff(i)
        dy = y.diff(i)
        for v in range(q.n):
            b_next = layout.offset(i + 1, v)
            b_here = layout.offset(i, v)
            for r in range(yt1.dims[v]):
                for c in range(xt.dims[v]):
                    row = [Fraction(0)] * layout.total
                    used = False
                    if b_next is not None and dx is not None:
                        o, rd, cd = b_next
                        for k in range(cd):
                            coef = dx.comps[v].rows[k][c]
                            if coef:
                                row[o + r * cd + k] += coef
                                used = True
                    if b_here is not None and dy is not None:
                        o, rd, cd = b_here
                        for k in range(rd):
                            coef = dy.comps[v].rows[r][k]
                            if coef:
                                row[o + k * cd + c] -= coef
                                used = True
                    if used:
                        rows.append(row)
    return rows


class HomSpace:
    """Hom(X, Y) in the homotopy category: class representatives plus the
    data needed to take coordinates of arbitrary chain maps."""

    def __init__(self, x: Complex, y: Complex):
        self.src = x
        self.tgt = y
        self._layout = _Layout(x, y, 0)
        rows = _intertwiner_rows(self._layout, x, y, 0) + _chain_rows(self._layout, x, y)
        if rows:
            z_basis = la.kernel_basis(QM(len(rows), self._layout.total, rows))
        else:
            z_basis = [la._unit(self._layout.total, j) for j in range(self._layout.total)]

        h_layout = _Layout(x, y, -1)
        h_rows = _intertwiner_rows(h_layout, x, y, -1)
        if h_rows:
            h_basis = la.kernel_basis(QM(len(h_rows), h_layout.total, h_rows))
        else:
            h_basis = [la._unit(h_layout.total, j) for j in range(h_layout.total)]
        null_vecs = []
        for hv in h_basis:
            hcomps = h_layout.unpack(hv, x, y, -1)
            ncomps = {}
            for i in x.terms:
                if i not in y.terms:
                    continue
                acc = RepMor.zero(x.terms[i], y.terms[i])
                dy = y.diff(i - 1)
                if dy is not None and i in hcomps:
                    acc = acc + dy.compose(hcomps[i])
                dx = x.diff(i)
                if dx is not None and (i + 1) in hcomps:
                    acc = acc + hcomps[i + 1].compose(dx)
                ncomps[i] = acc
            null_vecs.append(self._layout.pack(ncomps, x, y, 0))

        self._null = [v for v in null_vecs if any(c != 0 for c in v)]
        # class representatives: greedily extend the null span inside Z
        chosen = []
        span = list(self._null)
        base = la.span_dim(span, self._layout.total) if span else 0
        for zv in z_basis:
            cand = span + [zv]
            d = la.span_dim(cand, self._layout.total)
            if d > base:
                chosen.append(zv)
                span = cand
                base = d
        self._rep_vecs = chosen
        self.reps = [ChainMap(x, y, self._layout.unpack(v, x, y, 0), check=False)
                     for v in chosen]
        self.dim = len(chosen)

    def zero(self) -> ChainMap:
        return ChainMap.zero(self.src, self.tgt)

    def from_coords(self, coords) -> ChainMap:
        if len(coords) != self.dim:
            raise ValueError("coordinate length mismatch")
        out = ChainMap.zero(self.src, self.tgt)
        for c, rep in zip(coords, self.reps):
            if c:
                out = out + rep.scaled(c)
        return out

    def coords(self, f: ChainMap) -> list:
        """Coordinates of the homotopy class of f in the representative basis."""
        vec = self._layout.pack(f.comps, self.src, self.tgt, 0)
        cols = self._rep_vecs + self._null
        if not cols:
            if any(c != 0 for c in vec):
                raise ValueError("map is not a chain map into this hom space")
            return []
        sol = la.coords_in_basis(cols, vec)
        if sol is None:
            raise ValueError("map does not lie in the chain map space")
        return sol[: self.dim]

    def is_null(self, f: ChainMap) -> bool:
        return all(c == 0 for c in self.coords(f))


# ---------------------------------------------------------------------------
# the category object

class DerivedCategory:
    """Workbench context for one quiver: table, presentations and hom caches.

    Caches are guarded by a lock so concurrent readers (the HTTP service)
    can share one instance.
    """

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.table = IndecTable(quiver)
        self._lock = threading.Lock()
        self._stalks = {}
        self._homs = {}
        self._mod_homs = {}

    @property
    def n(self) -> int:
        return self.quiver.n

    # -- presentations ------------------------------------------------------

    def stalk_complex(self, id: str, shift: int) -> Complex:
        key = (self.table.entry(id).id, shift)
        with self._lock:
            got = self._stalks.get(key)
        if got is not None:
            return got
        entry = self.table.entry(id)
        if entry.is_projective:
            cx = Complex(self.quiver, {-shift: entry.rep}, {}, stalk_key=key)
        else:
            cov = rp.projective_cover(entry.rep)
            parts = rp.morphism_parts(cov.map)
            p1 = parts.kernel
            incl = parts.kernel_incl
            cx = Complex(self.quiver,
                         {-shift - 1: p1, -shift: cov.rep},
                         {-shift - 1: incl},
                         stalk_key=key)
        with self._lock:
            self._stalks.setdefault(key, cx)
        return cx

    def present(self, x: StalkSum) -> Complex:
        return self.present_with_io(x)[0]

    def present_with_io(self, x: StalkSum) -> tuple:
        """(complex, inclusions, projections), one per stalk entry of x."""
        parts = [self.stalk_complex(i, s) for (i, s) in x]
        if len(parts) == 1:
            p = parts[0]
            ident = ChainMap(p, p, {i: RepMor.identity(t) for i, t in p.terms.items()},
                             check=False)
            return p, [ident], [ident]
        return direct_sum_complexes(parts, self.quiver)

    # -- hom spaces ----------------------------------------------------------

    def hom(self, x, y) -> HomSpace:
        """Hom space between complexes or stalk sums (presented on demand)."""
        if isinstance(x, StalkSum):
            x = self.present(x)
        if isinstance(y, StalkSum):
            y = self.present(y)
        key = None
        if x.stalk_key is not None and y.stalk_key is not None:
            key = (x.stalk_key, y.stalk_key)
            with self._lock:
                got = self._homs.get(key)
            if got is not None:
                return got
        hs = HomSpace(x, y)
        if key is not None:
            with self._lock:
                self._homs.setdefault(key, hs)
        return hs

    def hom_dim(self, x, y) -> int:
        return self.hom(x, y).dim

    def module_hom_dim(self, a: str, b: str) -> int:
        key = (a, b)
        with self._lock:
            got = self._mod_homs.get(key)
        if got is not None:
            return got[0]
        ea, eb = self.table.entry(a), self.table.entry(b)
        h = rp.hom_dim(ea.rep, eb.rep)
        e = rp.ext1_dim(ea.rep, eb.rep)
        with self._lock:
            self._mod_homs.setdefault(key, (h, e))
        return h

    def module_ext_dim(self, a: str, b: str) -> int:
        self.module_hom_dim(a, b)
        with self._lock:
            return self._mod_homs[(a, b)][1]

    def stalk_hom_dim(self, a, b) -> int:
        """dim Hom(M[i], N[j]) from the stalk formula.

        Equals module Hom when j = i, module Ext^1 when j = i + 1 and zero
        otherwise; the homotopy computation must reproduce this.
        """
        (ida, i), (idb, j) = a, b
        if j == i:
            return self.module_hom_dim(ida, idb)
        if j == i + 1:
            return self.module_ext_dim(ida, idb)
        return 0

    def sum_hom_dim(self, x: StalkSum, y: StalkSum) -> int:
        return sum(self.stalk_hom_dim(a, b) for a in x for b in y)

    # -- cohomology and normal forms -----------------------------------------

    def cohomology(self, x: Complex, i: int) -> tuple:
        """(H^i as a Rep, section, retraction).

        section[v]: columns lifting the chosen H-basis into ker d^i_v;
        retraction[v]: matrix computing quotient coordinates of kernel
        elements given in ambient coordinates.
        """
        q = self.quiver
        term = x.term(i)
        d_out = x.diff(i)
        d_in = x.diff(i - 1)
        kernels = []
        for v in range(q.n):
            if d_out is None:
                kernels.append([la._unit(term.dims[v], j) for j in range(term.dims[v])])
            else:
                kernels.append(la.kernel_basis(d_out.comps[v]))
        h_dims = []
        sections = []
        retractions = []
        im_in_k = []
        reps_per_v = []
        for v in range(q.n):
            kmat = la.from_columns(kernels[v], term.dims[v])
            ims = []
            if d_in is not None:
                for col in d_in.comps[v].columns():
                    coords = la.solve(kmat, col)
                    if coords is None:
                        raise RuntimeError("image does not lie in kernel; d o d != 0?")
                    ims.append(coords)
            reps = la.quotient_basis(kmat.n, ims)
            h_dims.append(len(reps))
            proj = la.projection_onto_quotient(kmat.n, ims, reps) if kmat.n else QM.zeros(0, 0)
            sec_cols = [kmat.matvec(r) for r in reps]
            sections.append(la.from_columns(sec_cols, term.dims[v]))
            retractions.append((kmat, proj))
            im_in_k.append(ims)
            reps_per_v.append(reps)
        maps = []
        for aidx, (u, w) in enumerate(q.arrows):
            cols = []
            for r in range(h_dims[u]):
                amb = term.maps[aidx].matvec(sections[u].col(r))
                kmat_w, proj_w = retractions[w]
                coords = la.solve(kmat_w, amb)
                if coords is None:
                    raise RuntimeError("arrow map does not preserve kernels")
                cols.append(proj_w.matvec(coords))
            maps.append(la.from_columns(cols, h_dims[w]))
        h_rep = Rep(q, h_dims, maps)
        return h_rep, sections, retractions

    def cohomology_map(self, f: ChainMap, i: int) -> RepMor:
        """The induced map H^i(f) between chosen cohomology models."""
        hx, sec_x, _ = self.cohomology(f.src, i)
        hy, _, ret_y = self.cohomology(f.tgt, i)
        comps = []
        for v in range(self.quiver.n):
            cols = []
            for r in range(hx.dims[v]):
                amb = f.comp(i).comps[v].matvec(sec_x[v].col(r))
                kmat, proj = ret_y[v]
                coords = la.solve(kmat, amb)
                if coords is None:
                    raise RuntimeError("chain map does not preserve kernels")
                cols.append(proj.matvec(coords))
            comps.append(la.from_columns(cols, hy.dims[v]))
        return RepMor(hx, hy, comps, check=False)

    def normalize(self, x: Complex) -> StalkSum:
        """Stalk decomposition of a complex: summands (id, -i) of each H^i."""
        pairs = []
        for i in x.degrees():
            h_rep, _, _ = self.cohomology(x, i)
            if h_rep.is_zero():
                continue
            for id_, mult in sorted(decompose(h_rep, self.table).items()):
                pairs.extend([(id_, -i)] * mult)
        return StalkSum(pairs)

    # -- convenience ----------------------------------------------------------

    def cone(self, f: ChainMap) -> Complex:
        return cone(f)[0]

    def parse_stalk(self, text: str):
        """Parse "P2" or "P2[1]" / "P2[-1]" into an (id, shift) pair."""
        text = text.strip()
        shift = 0
        if text.endswith("]"):
            base, _, rest = text.partition("[")
            shift = int(rest[:-1])
            text = base
        return (self.table.entry(text).id, shift)

    def parse_stalk_sum(self, text: str) -> StalkSum:
        items = [t for t in (s.strip() for s in text.split(",")) if t]
        return StalkSum([self.parse_stalk(t) for t in items])


def degree(pair) -> int:
    """The degree of a stalk (its shift)."""
    return pair[1]
