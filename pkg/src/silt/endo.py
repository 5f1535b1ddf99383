"""Endomorphism algebras of stalk sums and their finite dimensional modules.

End(T) for a basic stalk sum T is stored as a structure-constant algebra:
the basis consists of homotopy classes grouped into blocks by (source
summand a, target summand b), with the diagonal blocks normalized so the
identity of each summand is itself a basis vector.  The product is
composition, so e_b * Gamma * e_a is the block Hom(T_a, T_b).

Hom(T, -) carries a right End(T)-action by precomposition.  Modules are
stored with those right actions; read them as left modules over the
opposite algebra, which is what the reports call Gamma.  Action matrices
therefore compose contravariantly: act(x o y) = act(y) @ act(x).

All summand endomorphism rings here are the ground field, so the algebras
are split basic and a module is simple exactly when its total dimension
is one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg as la
from .derived import ChainMap, Complex, DerivedCategory, StalkSum
from .linalg import QM

MODULE_SIDE_NOTE = ("modules are left modules over the opposite algebra; "
                    "stored action matrices are right actions by precomposition")


def _zero_vec(n: int) -> list:
    return [Fraction(0)] * n


class EndoAlgebra:
    """A finite dimensional algebra given by blocks and structure constants.

    `summands` names the blocks; `block_dims[(a, b)]` is the dimension of
    the (a -> b) block; `table[(i, j)]` holds the coordinates of the product
    basis_i o basis_j when composable (absent means zero).  `e[a]` is the
    basis index of the a-th idempotent.
    """

    def __init__(self, summands, block_dims, table, e, blocks,
                 hom_spaces=None, stalks=None, d=None, check: bool = True):
        self.summands = tuple(summands)
        self.k = len(self.summands)
        self.block_dims = dict(block_dims)
        self.table = dict(table)
        self.e = list(e)
        self.blocks = {key: list(v) for key, v in blocks.items()}
        self.hom_spaces = hom_spaces
        self.stalks = stalks
        self.d = d
        self.dim = sum(self.block_dims.values())
        self.basis_block = [None] * self.dim
        for key, idxs in self.blocks.items():
            for i in idxs:
                self.basis_block[i] = key
        self._radical_cache = None
        if check:
            self._check_invariants()

    # -- construction --------------------------------------------------------

    @classmethod
    def of_sum(cls, d: DerivedCategory, t: StalkSum, check: bool = True) -> "EndoAlgebra":
        """End(T) with basis the homotopy classes between summand pairs."""
        if not t.is_basic():
            raise ValueError("endomorphism algebra wants a basic stalk sum")
        summands = t.entries
        k = len(summands)
        stalks = [d.stalk_complex(*p) for p in summands]
        hom_spaces = {}
        basis_maps = {}
        block_dims = {}
        blocks = {}
        e = [0] * k
        idx = 0
        for a in range(k):
            for b in range(k):
                hs = d.hom(stalks[a], stalks[b])
                hom_spaces[(a, b)] = hs
                if a == b:
                    if hs.dim != 1:
                        raise RuntimeError("summand endomorphism ring is not a line")
                    ident = ChainMap(stalks[a], stalks[a],
                                     {i: _identity_mor(rep)
                                      for i, rep in stalks[a].terms.items()},
                                     check=False)
                    basis_maps[(a, b)] = [ident]
                    e[a] = idx
                else:
                    basis_maps[(a, b)] = hs.reps
                block_dims[(a, b)] = len(basis_maps[(a, b)])
                blocks[(a, b)] = list(range(idx, idx + block_dims[(a, b)]))
                idx += block_dims[(a, b)]
        dim = idx

        def block_coords(a, b, f):
            hs = hom_spaces[(a, b)]
            raw = hs.coords(f)
            if a != b:
                return raw
            # rescale so the identity representative has coordinate one
            unit = hs.coords(basis_maps[(a, b)][0])[0]
            return [raw[0] / unit]

        table = {}
        flat = []
        for a in range(k):
            for b in range(k):
                for pos, f in enumerate(basis_maps[(a, b)]):
                    flat.append((a, b, f))
        for i, (ai, bi, fi) in enumerate(flat):
            for j, (aj, bj, fj) in enumerate(flat):
                if bj != ai:
                    continue
                coords = block_coords(aj, bi, fi.compose(fj))
                if any(c != 0 for c in coords):
                    vec = _zero_vec(dim)
                    for pos, c in zip(blocks[(aj, bi)], coords):
                        vec[pos] = c
                    table[(i, j)] = vec
        return cls(summands, block_dims, table, e, blocks,
                   hom_spaces=hom_spaces, stalks=stalks, d=d, check=check)

    @classmethod
    def square_zero_local(cls) -> "EndoAlgebra":
        """The two dimensional local algebra with a square-zero generator."""
        dim2 = {(0, 0): 2}
        blocks = {(0, 0): [0, 1]}
        table = {
            (0, 0): [Fraction(1), Fraction(0)],
            (0, 1): [Fraction(0), Fraction(1)],
            (1, 0): [Fraction(0), Fraction(1)],
        }
        return cls([("local", 0)], dim2, table, [0], blocks)

    # -- invariants -----------------------------------------------------------

    def _check_invariants(self) -> None:
        for i in range(self.dim):
            for j in range(self.dim):
                prod = self.product(i, j)
                src_j, tgt_j = self.basis_block[j]
                src_i, tgt_i = self.basis_block[i]
                if src_i != tgt_j:
                    if prod is not None:
                        raise RuntimeError("non-composable basis pair has a product")
                    continue
                if prod is not None:
                    support = {self.basis_block[p] for p, c in enumerate(prod) if c}
                    if not support <= {(src_j, tgt_i)}:
                        raise RuntimeError("product leaves its block")
        # unit: the sum of idempotents acts as identity on both sides
        one = _zero_vec(self.dim)
        for idx in self.e:
            one[idx] = Fraction(1)
        for j in range(self.dim):
            unit_vec = _zero_vec(self.dim)
            unit_vec[j] = Fraction(1)
            if self.mult(one, unit_vec) != unit_vec or self.mult(unit_vec, one) != unit_vec:
                raise RuntimeError("idempotents do not sum to a unit")
        # associativity over all basis triples
        for i in range(self.dim):
            vi = _zero_vec(self.dim)
            vi[i] = Fraction(1)
            for j in range(self.dim):
                vj = _zero_vec(self.dim)
                vj[j] = Fraction(1)
                ij = self.mult(vi, vj)
                for l in range(self.dim):
                    vl = _zero_vec(self.dim)
                    vl[l] = Fraction(1)
                    left = self.mult(ij, vl)
                    right = self.mult(vi, self.mult(vj, vl))
                    if left != right:
                        raise RuntimeError("structure constants are not associative")

    # -- products -------------------------------------------------------------

    def product(self, i: int, j: int) -> Optional[list]:
        return self.table.get((i, j))

    def mult(self, x: Sequence, y: Sequence) -> list:
        out = _zero_vec(self.dim)
        for i, ci in enumerate(x):
            if not ci:
                continue
            for j, cj in enumerate(y):
                if not cj:
                    continue
                prod = self.table.get((i, j))
                if prod is None:
                    continue
                c = ci * cj
                for p, v in enumerate(prod):
                    if v:
                        out[p] += c * v
        return out

    def left_mult_matrix(self, x: Sequence) -> QM:
        cols = []
        for j in range(self.dim):
            vj = _zero_vec(self.dim)
            vj[j] = Fraction(1)
            cols.append(self.mult(x, vj))
        return la.from_columns(cols, self.dim)

    def idempotent_of(self, a: int) -> list:
        v = _zero_vec(self.dim)
        v[self.e[a]] = Fraction(1)
        return v

    def summand_index(self, pair) -> int:
        return self.summands.index(tuple(pair))

    # -- radical and quiver -----------------------------------------------------

    def radical_data(self) -> "RadicalData":
        if self._radical_cache is None:
            self._radical_cache = _compute_radical(self)
        return self._radical_cache

    def cartan(self) -> list:
        """Cartan matrix with entry [b][a] = dim of the (a -> b) block."""
        return [[self.block_dims[(a, b)] for a in range(self.k)]
                for b in range(self.k)]

    def transformed(self, changes: dict) -> "EndoAlgebra":
        """Same algebra in a new basis; changes maps (a, b) to an invertible
        matrix whose columns express new block basis vectors in the old ones.

        Diagonal blocks must keep their identity basis vector, so only
        off-diagonal blocks may be changed.  Intended for invariance tests.
        """
        p = QM.identity(self.dim)
        rows = [row[:] for row in p.rows]
        for (a, b), mat in changes.items():
            if a == b:
                raise ValueError("diagonal blocks are pinned to the identity")
            idxs = self.blocks[(a, b)]
            if mat.m != len(idxs) or mat.n != len(idxs):
                raise ValueError("block change has the wrong shape")
            for r, gi in enumerate(idxs):
                for c, gj in enumerate(idxs):
                    rows[gi][gj] = mat.rows[r][c]
        p = QM(self.dim, self.dim, rows)
        p_inv = la.solve_matrix(p, QM.identity(self.dim))
        if p_inv is None:
            raise ValueError("basis change is not invertible")
        table = {}
        for i in range(self.dim):
            for j in range(self.dim):
                if self.basis_block[j][1] != self.basis_block[i][0]:
                    continue
                acc = self.mult(p.col(i), p.col(j))
                coords = p_inv.matvec(acc)
                if any(c != 0 for c in coords):
                    table[(i, j)] = coords
        return EndoAlgebra(self.summands, self.block_dims, table, self.e,
                           self.blocks)


def _identity_mor(rep):
    from .reps import RepMor
    return RepMor.identity(rep)


@dataclass
class RadicalData:
    """Radical basis (as coordinate vectors), arrow counts and nilpotency."""

    basis: list
    arrow_counts: list
    nilpotency_index: int
    rad_square_dim: int


def _compute_radical(alg: EndoAlgebra) -> RadicalData:
    n = alg.dim
    left_mats = [alg.left_mult_matrix(_basis_vec(n, i)) for i in range(n)]
    gram_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = left_mats[i] @ left_mats[j]
            row.append(sum(prod.rows[t][t] for t in range(n)))
        gram_rows.append(row)
    rad = la.kernel_basis(QM(n, n, gram_rows))

    # cross-check against the block structure when the algebra is split basic
    if all(alg.block_dims[(a, a)] == 1 for a in range(alg.k)):
        off = [i for i in range(n) if alg.basis_block[i][0] != alg.basis_block[i][1]]
        if len(rad) != len(off):
            raise RuntimeError("trace radical disagrees with the block radical")
        for v in rad:
            if any(v[alg.e[a]] != 0 for a in range(alg.k)):
                raise RuntimeError("trace radical meets the idempotent span")

    # nilpotency: powers of the radical span must reach zero
    power = list(rad)
    nil = 1
    while power:
        if nil > n + 1:
            raise RuntimeError("radical is not nilpotent")
        nxt = []
        for x in power:
            for y in rad:
                v = alg.mult(x, y)
                if any(c != 0 for c in v):
                    nxt.append(v)
        nxt_basis = _span_reduce(nxt, n)
        power = nxt_basis
        nil += 1

    rad2 = []
    for x in rad:
        for y in rad:
            v = alg.mult(x, y)
            if any(c != 0 for c in v):
                rad2.append(v)
    rad2 = _span_reduce(rad2, n)

    arrow_counts = [[0] * alg.k for _ in range(alg.k)]
    for a in range(alg.k):
        for b in range(alg.k):
            idxs = alg.blocks[(a, b)]
            if not idxs:
                continue
            rad_block = _restrict_to_block(rad, idxs)
            rad2_block = _restrict_to_block(rad2, idxs)
            d1 = la.span_dim(rad_block, len(idxs))
            d2 = la.span_dim(rad2_block, len(idxs))
            arrow_counts[a][b] = d1 - d2
    return RadicalData(rad, arrow_counts, nil, la.span_dim(rad2, n) if rad2 else 0)


def _basis_vec(n: int, i: int) -> list:
    v = _zero_vec(n)
    v[i] = Fraction(1)
    return v


def _span_reduce(vectors: list, dim: int) -> list:
    if not vectors:
        return []
    r, rk, _ = la.rref(QM(len(vectors), dim, vectors))
    return r.rows[:rk]


def _restrict_to_block(vectors: list, idxs: list) -> list:
    """Project coordinate vectors onto one block (valid: rad is block graded)."""
    out = []
    for v in vectors:
        w = [v[i] for i in idxs]
        if any(c != 0 for c in w):
            out.append(w)
    return out


# ---------------------------------------------------------------------------
# finite dimensional modules

class FdModule:
    """A module over an EndoAlgebra: per-summand components and one action
    matrix per algebra basis element (contravariant composition law)."""

    def __init__(self, alg: EndoAlgebra, comp_dims: Sequence[int], actions,
                 hom_spaces=None, check: bool = True):
        self.alg = alg
        self.comp_dims = list(comp_dims)
        self.offsets = []
        o = 0
        for dmn in self.comp_dims:
            self.offsets.append(o)
            o += dmn
        self.dim = o
        self.actions = list(actions)
        self.hom_spaces = hom_spaces
        if check:
            self.validate()

    def is_zero(self) -> bool:
        return self.dim == 0

    def comp_slice(self, c: int) -> tuple:
        return self.offsets[c], self.offsets[c] + self.comp_dims[c]

    def validate(self) -> None:
        alg = self.alg
        if len(self.actions) != alg.dim:
            raise ValueError("one action matrix per basis element required")
        ident = QM.identity(self.dim)
        total = QM.zeros(self.dim, self.dim)
        for a in range(alg.k):
            total = total + self.actions[alg.e[a]]
        if total != ident:
            raise RuntimeError("idempotent actions do not sum to the identity")
        for i in range(alg.dim):
            a, b = alg.basis_block[i]
            act = self.actions[i]
            # right action by a (a -> b) class maps component b into component a
            for r in range(self.dim):
                for c in range(self.dim):
                    v = act.rows[r][c]
                    if v == 0:
                        continue
                    in_a = self.offsets[a] <= r < self.offsets[a] + self.comp_dims[a]
                    in_b = self.offsets[b] <= c < self.offsets[b] + self.comp_dims[b]
                    if not (in_a and in_b):
                        raise RuntimeError("action leaves its block")
        for i in range(alg.dim):
            for j in range(alg.dim):
                prod = alg.product(i, j)
                expect = QM.zeros(self.dim, self.dim)
                if prod is not None:
                    for p, cf in enumerate(prod):
                        if cf:
                            expect = expect + self.actions[p].scaled(cf)
                got = self.actions[j] @ self.actions[i]
                if got != expect:
                    raise RuntimeError("action does not respect structure constants")

    def act(self, x: Sequence) -> QM:
        out = QM.zeros(self.dim, self.dim)
        for i, c in enumerate(x):
            if c:
                out = out + self.actions[i].scaled(c)
        return out


def zero_module(alg: EndoAlgebra) -> FdModule:
    return FdModule(alg, [0] * alg.k, [QM.zeros(0, 0)] * alg.dim, check=False)


def simple_module(alg: EndoAlgebra, a: int) -> FdModule:
    comp = [0] * alg.k
    comp[a] = 1
    actions = []
    for i in range(alg.dim):
        actions.append(QM.identity(1) if i == alg.e[a] else QM.zeros(1, 1))
    return FdModule(alg, comp, actions)


def regular_projective(alg: EndoAlgebra, a: int) -> FdModule:
    """The right ideal e_a * Gamma: all basis classes with target summand a."""
    members = []
    comp = [0] * alg.k
    for c in range(alg.k):
        idxs = alg.blocks[(c, a)]
        comp[c] = len(idxs)
        members.extend(idxs)
    pos = {g: p for p, g in enumerate(members)}
    actions = []
    for x in range(alg.dim):
        cols = []
        for g in members:
            prod = alg.product(g, x)
            col = _zero_vec(len(members))
            if prod is not None:
                for p, cf in enumerate(prod):
                    if cf:
                        col[pos[p]] = cf
            cols.append(col)
        actions.append(la.from_columns(cols, len(members)))
    return FdModule(alg, comp, actions)


def g_module(alg: EndoAlgebra, x) -> FdModule:
    """Hom(T, x) as a module over End(T), component c = Hom(T_c, x)."""
    if alg.d is None or alg.stalks is None:
        raise ValueError("g_module needs an algebra built from a stalk sum")
    d = alg.d
    if isinstance(x, StalkSum):
        x = d.present(x)
    spaces = [d.hom(s, x) for s in alg.stalks]
    comp = [hs.dim for hs in spaces]
    offsets = []
    o = 0
    for dmn in comp:
        offsets.append(o)
        o += dmn
    total = o
    actions = []
    for i in range(alg.dim):
        a, b = alg.basis_block[i]
        rep_i = _algebra_basis_map(alg, i)
        mat = QM.zeros(total, total)
        rows = [r[:] for r in mat.rows]
        for col, phi in enumerate(spaces[b].reps):
            composed = phi.compose(rep_i)
            coords = spaces[a].coords(composed)
            for r, cf in enumerate(coords):
                rows[offsets[a] + r][offsets[b] + col] = cf
        actions.append(QM(total, total, rows))
    return FdModule(alg, comp, actions, hom_spaces=spaces)


def _algebra_basis_map(alg: EndoAlgebra, i: int) -> ChainMap:
    a, b = alg.basis_block[i]
    if i == alg.e[a]:
        stalk = alg.stalks[a]
        from .reps import RepMor
        return ChainMap(stalk, stalk,
                        {n: RepMor.identity(t) for n, t in stalk.terms.items()},
                        check=False)
    hs = alg.hom_spaces[(a, b)]
    pos = alg.blocks[(a, b)].index(i)
    return hs.reps[pos]


def g_morphism(alg: EndoAlgebra, f: ChainMap, src_mod: FdModule,
               tgt_mod: FdModule) -> QM:
    """The induced module map Hom(T, f): block diagonal by summand."""
    if src_mod.hom_spaces is None or tgt_mod.hom_spaces is None:
        raise ValueError("g_morphism needs modules built by g_module")
    rows = [[Fraction(0)] * src_mod.dim for _ in range(tgt_mod.dim)]
    for c in range(alg.k):
        src_hs = src_mod.hom_spaces[c]
        tgt_hs = tgt_mod.hom_spaces[c]
        so, _ = src_mod.comp_slice(c)
        to, _ = tgt_mod.comp_slice(c)
        for col, phi in enumerate(src_hs.reps):
            coords = tgt_hs.coords(f.compose(phi))
            for r, cf in enumerate(coords):
                rows[to + r][so + col] = cf
    return QM(tgt_mod.dim, src_mod.dim, rows)


def module_hom_dim(u: FdModule, v: FdModule) -> int:
    """Dimension of the space of maps commuting with every basis action.

    Commuting with the idempotent actions already forces a module map to be
    block diagonal (one v_c x u_c block per component), so only the
    non-idempotent basis actions contribute constraint rows.
    """
    alg = u.alg
    if alg is not v.alg:
        raise ValueError("modules live over different algebras")
    if u.dim == 0 or v.dim == 0:
        return 0
    offsets = []
    o = 0
    for c in range(alg.k):
        offsets.append(o)
        o += v.comp_dims[c] * u.comp_dims[c]
    unknowns = o
    if unknowns == 0:
        return 0
    idem = set(alg.e)
    rows = []
    for i in range(alg.dim):
        if i in idem:
            continue
        a, b = alg.basis_block[i]
        au, av = u.actions[i], v.actions[i]
        ua_lo, _ = u.comp_slice(a)
        ub_lo, _ = u.comp_slice(b)
        va_lo, _ = v.comp_slice(a)
        vb_lo, _ = v.comp_slice(b)
        # constraint (F_a au_i - av_i F_b)[r][c] = 0 on the (a <- b) block
        for r in range(v.comp_dims[a]):
            for c in range(u.comp_dims[b]):
                row = [Fraction(0)] * unknowns
                used = False
                for t in range(u.comp_dims[a]):
                    cf = au.rows[ua_lo + t][ub_lo + c]
                    if cf:
                        row[offsets[a] + r * u.comp_dims[a] + t] += cf
                        used = True
                for t in range(v.comp_dims[b]):
                    cf = av.rows[va_lo + r][vb_lo + t]
                    if cf:
                        row[offsets[b] + t * u.comp_dims[b] + c] -= cf
                        used = True
                if used:
                    rows.append(row)
    if not rows:
        return unknowns
    return unknowns - la.rank(QM(len(rows), unknowns, rows))


def factoring_dim(d: DerivedCategory, m, n, through: StalkSum) -> int:
    """Dimension of the span of maps m -> n passing through summands of
    `through` (composites m -> t -> n over all hom basis pairs).

    m and n may be stalk sums or already-presented complexes.
    """
    m_cx = m if isinstance(m, Complex) else d.present(m)
    n_cx = n if isinstance(n, Complex) else d.present(n)
    if not m_cx.terms or not n_cx.terms:
        return 0
    target = d.hom(m_cx, n_cx)
    if target.dim == 0:
        return 0
    vecs = []
    for t in through.distinct():
        t_cx = d.stalk_complex(*t)
        first = d.hom(m_cx, t_cx)
        if first.dim == 0:
            continue
        second = d.hom(t_cx, n_cx)
        for w in second.reps:
            for v in first.reps:
                vecs.append(target.coords(w.compose(v)))
    return la.span_dim(vecs, target.dim)


# ---------------------------------------------------------------------------
# projective covers and global dimension

@dataclass
class CoverResult:
    cover: FdModule
    map: QM
    multiplicities: list
    generators: list = field(repr=False)


def _module_direct_sum(alg: EndoAlgebra, parts: Sequence[FdModule]) -> tuple:
    """Direct sum grouped by component; returns (sum, index maps per part)."""
    comp = [sum(p.comp_dims[c] for p in parts) for c in range(alg.k)]
    offsets = []
    o = 0
    for dmn in comp:
        offsets.append(o)
        o += dmn
    total = o
    maps = []
    placed = [0] * alg.k
    for p in parts:
        idx_map = {}
        for c in range(alg.k):
            po, _ = p.comp_slice(c)
            for t in range(p.comp_dims[c]):
                idx_map[po + t] = offsets[c] + placed[c] + t
            placed[c] += p.comp_dims[c]
        maps.append(idx_map)
    actions = []
    for i in range(alg.dim):
        rows = [[Fraction(0)] * total for _ in range(total)]
        for p, idx_map in zip(parts, maps):
            act = p.actions[i]
            for r in range(p.dim):
                for c in range(p.dim):
                    if act.rows[r][c]:
                        rows[idx_map[r]][idx_map[c]] = act.rows[r][c]
        actions.append(QM(total, total, rows))
    return FdModule(alg, comp, actions, check=False), maps


def radical_vectors(m: FdModule) -> list:
    """Spanning vectors of M * rad, grouped into total coordinates."""
    alg = m.alg
    out = []
    for i in range(alg.dim):
        a, b = alg.basis_block[i]
        if a == b:
            continue
        for col in m.actions[i].columns():
            if any(c != 0 for c in col):
                out.append(col)
    return out


def top_dims(m: FdModule) -> list:
    """Dimension vector of M / M rad per summand component."""
    alg = m.alg
    rad = radical_vectors(m)
    dims = []
    for c in range(alg.k):
        lo, hi = m.comp_slice(c)
        block = [v[lo:hi] for v in rad if any(x != 0 for x in v[lo:hi])]
        dims.append(m.comp_dims[c] - la.span_dim(block, hi - lo))
    return dims


def projective_cover_module(m: FdModule) -> CoverResult:
    """Minimal projective cover of m, built from top generators."""
    alg = m.alg
    rad = radical_vectors(m)
    generators = []
    mults = [0] * alg.k
    for c in range(alg.k):
        lo, hi = m.comp_slice(c)
        block = [v[lo:hi] for v in rad if any(x != 0 for x in v[lo:hi])]
        reps = la.quotient_basis(hi - lo, block)
        for rvec in reps:
            total = _zero_vec(m.dim)
            for t, cf in enumerate(rvec):
                total[lo + t] = cf
            generators.append((c, total))
            mults[c] += 1
    parts = [regular_projective(alg, c) for c, _ in generators]
    cover, idx_maps = _module_direct_sum(alg, parts)
    cols = [None] * cover.dim
    for (c, gen), part, idx_map in zip(generators, parts, idx_maps):
        # basis of e_c Gamma are the classes with target summand c
        members = []
        for cc in range(alg.k):
            members.extend(alg.blocks[(cc, c)])
        for p_local, g in enumerate(members):
            cols[idx_map[p_local]] = m.actions[g].matvec(gen)
    mat = la.from_columns(cols, m.dim)
    if la.rank(mat) != m.dim:
        raise RuntimeError("projective cover map is not surjective")
    return CoverResult(cover, mat, mults, generators)


def syzygy(m: FdModule) -> FdModule:
    """Kernel of the minimal projective cover, as a module."""
    alg = m.alg
    cov = projective_cover_module(m)
    p = cov.cover
    kernel_by_comp = []
    kernel_total = []
    for c in range(alg.k):
        lo, hi = p.comp_slice(c)
        mlo, mhi = m.comp_slice(c)
        sub = QM(mhi - mlo, hi - lo,
                 [[cov.map.rows[r][col] for col in range(lo, hi)]
                  for r in range(mlo, mhi)])
        ker = la.kernel_basis(sub)
        lifted = []
        for v in ker:
            total = _zero_vec(p.dim)
            for t, cf in enumerate(v):
                total[lo + t] = cf
            lifted.append(total)
        kernel_by_comp.append(lifted)
        kernel_total.extend(lifted)
    comp = [len(v) for v in kernel_by_comp]
    if sum(comp) == 0:
        return zero_module(alg)
    basis_cols = la.from_columns(kernel_total, p.dim)
    actions = []
    for i in range(alg.dim):
        cols = []
        for v in kernel_total:
            w = p.actions[i].matvec(v)
            coords = la.solve(basis_cols, w)
            if coords is None:
                raise RuntimeError("syzygy is not action stable")
            cols.append(coords)
        actions.append(la.from_columns(cols, len(kernel_total)))
    return FdModule(alg, comp, actions)


def proj_dim(m: FdModule, cutoff: int) -> Optional[int]:
    """Projective dimension via iterated syzygies; None when above cutoff."""
    if m.is_zero():
        return 0
    cur = m
    d = 0
    while True:
        nxt = syzygy(cur)
        if nxt.is_zero():
            return d
        cur = nxt
        d += 1
        if d > cutoff:
            return None


def global_dimension(alg: EndoAlgebra, cutoff: int) -> Optional[int]:
    """Max projective dimension over the simple modules; None above cutoff."""
    worst = 0
    for a in range(alg.k):
        pd = proj_dim(simple_module(alg, a), cutoff)
        if pd is None:
            return None
        worst = max(worst, pd)
    return worst


# ---------------------------------------------------------------------------
# quotients (used to identify cokernels of induced module maps)

def quotient_dims(m: FdModule, image_cols: Sequence) -> list:
    """Component dimension vector of M / span(image_cols)."""
    dims = []
    for c in range(m.alg.k):
        lo, hi = m.comp_slice(c)
        block = [col[lo:hi] for col in image_cols
                 if any(x != 0 for x in col[lo:hi])]
        dims.append(m.comp_dims[c] - la.span_dim(block, hi - lo))
    return dims
