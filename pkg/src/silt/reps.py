"""Finite dimensional representations of a Dynkin quiver over Q.

A representation assigns a vector space Q^d_v to each vertex and a matrix to
each arrow.  Morphisms are vertex-indexed matrix families commuting with the
arrow maps.  Conventions:

* vectors are columns; the matrix of arrow a: u -> w maps M_u to M_w;
* a path is applied left factor first, so the matrix of a path a1...ak is
  M_ak @ ... @ M_a1;
* the projective at v is supported on the vertices reachable from v, the
  injective at v on the vertices that reach v; over a tree orientation both
  are thin (all dimensions 0 or 1), which this module exploits.

Hom spaces are computed by solving the intertwiner system exactly.  The
extension dimension uses the hereditary identity
dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N> with the Euler form
<d, e> = sum_v d_v e_v - sum_{a: u->w} d_u e_w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg as la
from .linalg import QM
from .quiver import Quiver


class Rep:
    """A representation: dimension vector plus one matrix per arrow."""

    __slots__ = ("quiver", "dims", "maps")

    def __init__(self, quiver: Quiver, dims: Sequence[int], maps: Sequence[QM]):
        if len(dims) != quiver.n or len(maps) != len(quiver.arrows):
            raise ValueError("dimension or arrow count mismatch")
        for (s, t), mat in zip(quiver.arrows, maps):
            if mat.m != dims[t] or mat.n != dims[s]:
                raise ValueError("arrow matrix shape mismatch")
        self.quiver = quiver
        self.dims = tuple(int(d) for d in dims)
        self.maps = tuple(maps)

    @classmethod
    def zero(cls, quiver: Quiver) -> "Rep":
        return cls(quiver, [0] * quiver.n, [QM.zeros(0, 0) for _ in quiver.arrows])

    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Rep)
            and self.quiver == other.quiver
            and self.dims == other.dims
            and self.maps == other.maps
        )

    def __hash__(self):
        return hash((self.quiver, self.dims, self.maps))

    def __repr__(self) -> str:
        return f"Rep({self.quiver.label}, dims={self.dims})"

    def path_matrix(self, path: Sequence[int]) -> QM:
        """Matrix of a path given as arrow indices, applied left first."""
        if not path:
            raise ValueError("empty path has no single matrix; use identity")
        out = self.maps[path[0]]
        for a in path[1:]:
            out = self.maps[a] @ out
        return out

    def transfer_matrix(self, u: int, w: int) -> Optional[QM]:
        """Matrix of the unique directed path u -> w, identity when u == w."""
        p = self.quiver.path_between(u, w)
        if p is None:
            return None
        if not p:
            return QM.identity(self.dims[u])
        return self.path_matrix(p)


class RepMor:
    """A morphism of representations; validates the intertwiner relations."""

    __slots__ = ("src", "tgt", "comps")

    def __init__(self, src: Rep, tgt: Rep, comps: Sequence[QM], check: bool = True):
        if src.quiver != tgt.quiver:
            raise ValueError("morphism between different quivers")
        if len(comps) != src.quiver.n:
            raise ValueError("one component per vertex required")
        for v in range(src.quiver.n):
            if comps[v].m != tgt.dims[v] or comps[v].n != src.dims[v]:
                raise ValueError(f"component shape mismatch at vertex {v}")
        if check:
            for (u, w), ms, mt in zip(src.quiver.arrows, src.maps, tgt.maps):
                if comps[w] @ ms != mt @ comps[u]:
                    raise ValueError("components do not intertwine the arrow maps")
        self.src = src
        self.tgt = tgt
        self.comps = tuple(comps)

    @classmethod
    def zero(cls, src: Rep, tgt: Rep) -> "RepMor":
        comps = [QM.zeros(tgt.dims[v], src.dims[v]) for v in range(src.quiver.n)]
        return cls(src, tgt, comps, check=False)

    @classmethod
    def identity(cls, rep: Rep) -> "RepMor":
        return cls(rep, rep, [QM.identity(d) for d in rep.dims], check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RepMor)
            and self.src == other.src
            and self.tgt == other.tgt
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash((self.src, self.tgt, self.comps))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def compose(self, first: "RepMor") -> "RepMor":
        """self o first (apply ``first``, then ``self``)."""
        if first.tgt != self.src:
            raise ValueError("composition shape mismatch")
        comps = [a @ b for a, b in zip(self.comps, first.comps)]
        return RepMor(first.src, self.tgt, comps, check=False)

    def __add__(self, other: "RepMor") -> "RepMor":
        if self.src != other.src or self.tgt != other.tgt:
            raise ValueError("sum of morphisms with different ends")
        return RepMor(self.src, self.tgt,
                      [a + b for a, b in zip(self.comps, other.comps)], check=False)

    def __neg__(self) -> "RepMor":
        return RepMor(self.src, self.tgt, [-c for c in self.comps], check=False)

    def scaled(self, c) -> "RepMor":
        return RepMor(self.src, self.tgt, [m.scaled(c) for m in self.comps], check=False)

    def __repr__(self) -> str:
        return f"RepMor({self.src.dims} -> {self.tgt.dims})"


# ---------------------------------------------------------------------------
# standard representations

def simple_rep(q: Quiver, v: int) -> Rep:
    dims = [1 if x == v else 0 for x in range(q.n)]
    maps = [QM.zeros(dims[t], dims[s]) for (s, t) in q.arrows]
    return Rep(q, dims, maps)


def _thin_rep(q: Quiver, support) -> Rep:
    dims = [1 if v in support else 0 for v in range(q.n)]
    maps = []
    for (s, t) in q.arrows:
        if dims[s] and dims[t]:
            maps.append(QM.identity(1))
        else:
            maps.append(QM.zeros(dims[t], dims[s]))
    return Rep(q, dims, maps)


def projective_rep(q: Quiver, v: int) -> Rep:
    """Indecomposable projective at v: thin, supported on reach(v)."""
    return _thin_rep(q, [w for w in range(q.n) if q.reaches(v, w)])


def injective_rep(q: Quiver, v: int) -> Rep:
    """Indecomposable injective at v: thin, supported on co-reach(v)."""
    return _thin_rep(q, [w for w in range(q.n) if q.reaches(w, v)])


def standard_projective_map(q: Quiver, u: int, v: int, coeff=1) -> RepMor:
    """coeff times the canonical map P(u) -> P(v) (nonzero iff v reaches u)."""
    pu, pv = projective_rep(q, u), projective_rep(q, v)
    comps = []
    for x in range(q.n):
        if pu.dims[x] and pv.dims[x] and q.reaches(v, u):
            comps.append(QM(1, 1, [[coeff]]))
        else:
            comps.append(QM.zeros(pv.dims[x], pu.dims[x]))
    return RepMor(pu, pv, comps)


def standard_injective_map(q: Quiver, u: int, v: int, coeff=1) -> RepMor:
    """coeff times the canonical map I(u) -> I(v) (nonzero iff v reaches u)."""
    iu, iv = injective_rep(q, u), injective_rep(q, v)
    comps = []
    for x in range(q.n):
        if iu.dims[x] and iv.dims[x] and q.reaches(v, u):
            comps.append(QM(1, 1, [[coeff]]))
        else:
            comps.append(QM.zeros(iv.dims[x], iu.dims[x]))
    return RepMor(iu, iv, comps)


# ---------------------------------------------------------------------------
# hom, euler form, ext

def hom_basis(m: Rep, n: Rep) -> list:
    """Basis of Hom(m, n) as RepMor objects.

    Solves the intertwiner system f_w @ M_a = N_a @ f_u over all arrows
    exactly; the basis is canonical given the elimination order.
    """
    q = m.quiver
    if n.quiver != q:
        raise ValueError("representations of different quivers")
    offsets = []
    total = 0
    for v in range(q.n):
        offsets.append(total)
        total += n.dims[v] * m.dims[v]
    if total == 0:
        return []
    rows = []
    for aidx, (u, w) in enumerate(q.arrows):
        ma, na = m.maps[aidx], n.maps[aidx]
        for r in range(n.dims[w]):
            for c in range(m.dims[u]):
                row = [Fraction(0)] * total
                used = False
                for k in range(m.dims[w]):
                    coef = ma.rows[k][c]
                    if coef:
                        row[offsets[w] + r * m.dims[w] + k] += coef
                        used = True
                for k in range(n.dims[u]):
                    coef = na.rows[r][k]
                    if coef:
                        row[offsets[u] + k * m.dims[u] + c] -= coef
                        used = True
                if used:
                    rows.append(row)
    if rows:
        kern = la.kernel_basis(QM(len(rows), total, rows))
    else:
        kern = [la._unit(total, j) for j in range(total)]
    basis = []
    for vec in kern:
        comps = []
        for v in range(q.n):
            o = offsets[v]
            comp = QM(n.dims[v], m.dims[v],
                      [vec[o + r * m.dims[v]: o + (r + 1) * m.dims[v]]
                       for r in range(n.dims[v])])
            comps.append(comp)
        basis.append(RepMor(m, n, comps))
    return basis


def hom_dim(m: Rep, n: Rep) -> int:
    return len(hom_basis(m, n))


def euler_form(q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """<d, e> = sum_v d_v e_v - sum_{a: u->w} d_u e_w."""
    val = sum(dv * ev for dv, ev in zip(d, e))
    for (u, w) in q.arrows:
        val -= d[u] * e[w]
    return val


def ext1_dim(m: Rep, n: Rep) -> int:
    """dim Ext^1(m, n) over a hereditary path algebra.

    Raises:
        RuntimeError: when the homological identity produces a negative
            value, which signals an intertwiner bug.
    """
    val = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if val < 0:
        raise RuntimeError("negative Ext dimension; intertwiner system is inconsistent")
    return val


# ---------------------------------------------------------------------------
# kernels, images, cokernels

@dataclass
class MorParts:
    """Kernel, image and cokernel of a morphism, with the connecting maps.

    kernel_incl : kernel -> src, image_incl : image -> tgt,
    image_factor : src -> image (so image_incl o image_factor = the map),
    coker_proj : tgt -> cokernel.
    """

    kernel: Rep
    image: Rep
    cokernel: Rep
    kernel_incl: RepMor
    image_incl: RepMor
    image_factor: RepMor
    coker_proj: RepMor


def _sub_rep(ambient: Rep, cols_per_vertex: list) -> tuple:
    """Subrepresentation spanned by the given column vectors per vertex.

    The span must be arrow-stable.  Returns (rep, inclusion).
    """
    q = ambient.quiver
    bases = [la.from_columns(cols, ambient.dims[v]) for v, cols in enumerate(cols_per_vertex)]
    dims = [b.n for b in bases]
    maps = []
    for aidx, (u, w) in enumerate(q.arrows):
        img = ambient.maps[aidx] @ bases[u]
        sol = la.solve_matrix(bases[w], img)
        if sol is None:
            raise RuntimeError("subspace family is not arrow-stable")
        maps.append(sol)
    sub = Rep(q, dims, maps)
    incl = RepMor(sub, ambient, bases, check=False)
    return sub, incl


def morphism_parts(f: RepMor) -> MorParts:
    q = f.src.quiver
    ker_cols = [la.kernel_basis(f.comps[v]) for v in range(q.n)]
    kernel, kernel_incl = _sub_rep(f.src, ker_cols)

    img_cols = []
    for v in range(q.n):
        _, _, pivots = la.rref(f.comps[v])
        img_cols.append([f.comps[v].col(j) for j in pivots])
    image, image_incl = _sub_rep(f.tgt, img_cols)

    factor_comps = []
    for v in range(q.n):
        sol = la.solve_matrix(image_incl.comps[v], f.comps[v])
        factor_comps.append(sol)
    image_factor = RepMor(f.src, image, factor_comps, check=False)

    coker_dims = []
    proj_comps = []
    coker_rep_cols = []
    for v in range(q.n):
        d = f.tgt.dims[v]
        sub = [list(c) for c in img_cols[v]]
        reps = la.quotient_basis(d, sub)
        coker_dims.append(len(reps))
        coker_rep_cols.append(reps)
        proj_comps.append(la.projection_onto_quotient(d, sub, reps))
    coker_maps = []
    for aidx, (u, w) in enumerate(q.arrows):
        rep_mat = la.from_columns(coker_rep_cols[u], f.tgt.dims[u])
        coker_maps.append(proj_comps[w] @ f.tgt.maps[aidx] @ rep_mat)
    cokernel = Rep(q, coker_dims, coker_maps)
    coker_proj = RepMor(f.tgt, cokernel, proj_comps, check=False)

    return MorParts(kernel, image, cokernel, kernel_incl, image_incl,
                    image_factor, coker_proj)


# ---------------------------------------------------------------------------
# direct sums

def direct_sum(reps: Sequence[Rep], quiver: Optional[Quiver] = None) -> tuple:
    """Direct sum with inclusion and projection morphisms.

    Returns (sum_rep, inclusions, projections).  An empty list yields the
    zero representation (then ``quiver`` is required).
    """
    if not reps:
        if quiver is None:
            raise ValueError("empty direct sum needs an explicit quiver")
        return Rep.zero(quiver), [], []
    q = reps[0].quiver
    dims = [sum(r.dims[v] for r in reps) for v in range(q.n)]
    maps = [la.block_diag([r.maps[a] for r in reps]) for a in range(len(q.arrows))]
    total = Rep(q, dims, maps)
    incls, projs = [], []
    offsets = [0] * q.n
    for r in reps:
        inc_comps, prj_comps = [], []
        for v in range(q.n):
            o = offsets[v]
            inc = QM.zeros(dims[v], r.dims[v])
            prj = QM.zeros(r.dims[v], dims[v])
            for i in range(r.dims[v]):
                inc.rows[o + i][i] = Fraction(1)
                prj.rows[i][o + i] = Fraction(1)
            inc_comps.append(inc)
            prj_comps.append(prj)
        incls.append(RepMor(r, total, inc_comps, check=False))
        projs.append(RepMor(total, r, prj_comps, check=False))
        for v in range(q.n):
            offsets[v] += r.dims[v]
    return total, incls, projs


# ---------------------------------------------------------------------------
# tops, socles, covers, hulls

def radical_cols(m: Rep) -> list:
    """Per-vertex spanning vectors of rad M = sum of incoming images."""
    q = m.quiver
    out = [[] for _ in range(q.n)]
    for aidx, (u, w) in enumerate(q.arrows):
        out[w].extend(m.maps[aidx].columns())
    return out


def socle_cols(m: Rep) -> list:
    """Per-vertex basis of soc M = joint kernel of the outgoing maps."""
    q = m.quiver
    out = []
    for v in range(q.n):
        outgoing = [m.maps[a] for a in q.outgoing[v]]
        if not outgoing:
            out.append([la._unit(m.dims[v], j) for j in range(m.dims[v])])
        else:
            stacked = la.vstack(outgoing) if len(outgoing) > 1 else outgoing[0]
            out.append(la.kernel_basis(stacked))
    return out


@dataclass
class CoverData:
    """A projective cover P -> M presented with standard projective blocks."""

    blocks: list          # vertex index per indecomposable projective copy
    rep: Rep              # the direct sum of those projectives
    incls: list           # per-copy inclusion RepMors into rep
    projs: list           # per-copy projections
    map: RepMor           # the cover P -> M


def projective_cover(m: Rep) -> CoverData:
    """Minimal projective cover, built from top representatives."""
    q = m.quiver
    rad = radical_cols(m)
    blocks = []
    generators = []
    for v in range(q.n):
        for rep_vec in la.quotient_basis(m.dims[v], [list(c) for c in rad[v]]):
            blocks.append(v)
            generators.append((v, rep_vec))
    parts = [projective_rep(q, v) for v in blocks]
    total, incls, projs = direct_sum(parts, q)
    comps = []
    for x in range(q.n):
        cols = []
        for (v, gen) in generators:
            if q.reaches(v, x):
                tm = m.transfer_matrix(v, x)
                cols.append(tm.matvec(gen))
        comps.append(la.from_columns(cols, m.dims[x]))
    cover = RepMor(total, m, comps)
    # Surjectivity is the cover property; anything else is a bug upstream.
    for x in range(q.n):
        if la.rank(comps[x]) != m.dims[x]:
            raise RuntimeError("projective cover failed to surject")
    return CoverData(blocks, total, incls, projs, cover)


@dataclass
class HullData:
    """An injective hull M -> I presented with standard injective blocks."""

    blocks: list
    rep: Rep
    incls: list
    projs: list
    map: RepMor


def injective_hull(m: Rep) -> HullData:
    """Minimal injective hull, built from socle coordinate functionals."""
    q = m.quiver
    soc = socle_cols(m)
    blocks = []
    functionals = []  # (vertex, row vector of length dims[v])
    for v in range(q.n):
        cols = [list(c) for c in soc[v]]
        if not cols:
            continue
        reps = la.quotient_basis(m.dims[v], cols)
        full = la.from_columns(cols + reps, m.dims[v])
        inv = la.solve_matrix(full, QM.identity(m.dims[v]))
        if inv is None:
            raise RuntimeError("socle basis completion failed")
        for i in range(len(cols)):
            blocks.append(v)
            functionals.append((v, list(inv.rows[i])))
    parts = [injective_rep(q, v) for v in blocks]
    total, incls, projs = direct_sum(parts, q)
    comps = []
    for x in range(q.n):
        rows = []
        for (v, lam) in functionals:
            if q.reaches(x, v):
                tm = m.transfer_matrix(x, v)
                lam_row = QM(1, m.dims[v], [lam]) @ tm
                rows.append(list(lam_row.rows[0]))
        if rows:
            comps.append(QM(len(rows), m.dims[x], rows))
        else:
            comps.append(QM.zeros(0, m.dims[x]))
    emb = RepMor(m, total, comps)
    # The hull map restricts to an isomorphism on socles, hence is injective;
    # a rank deficiency here means the functional construction is broken.
    for x in range(q.n):
        if la.rank(comps[x]) != m.dims[x]:
            raise RuntimeError("injective hull failed to embed")
    return HullData(blocks, total, incls, projs, emb)
