"""Indecomposable representations: AR translate, enumeration, decomposition.

The inverse AR translate of a non-injective module is the cokernel of the
map obtained by transporting a minimal injective copresentation back along
the projective/injective correspondence I(v) <-> P(v); dually for the AR
translate and a minimal projective presentation.  Over a Dynkin quiver every
indecomposable arises from an indecomposable projective by iterating the
inverse translate, which is how the table is built.

Identity of indecomposables: dimension vectors separate indecomposables
(each one is a positive root), but a dimension vector alone does not certify
indecomposability of an arbitrary representation, so identification uses a
split pairing check: phi: I -> X and psi: X -> I with psi o phi a nonzero
scalar exhibit I as a summand of X.  Decomposition peels such summands off
with the idempotent phi o psi until nothing is left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg as la
from . import reps as rp
from .quiver import Quiver
from .reps import Rep, RepMor


def _block_coefficients(h: RepMor, src_blocks, src_incls, tgt_blocks, tgt_projs,
                        read_at_source: bool) -> list:
    """Coefficients of a map between sums of thin standard modules.

    Each block pair carries at most a one dimensional hom space, spanned by
    the canonical all-ones map, so the coefficient is a single matrix entry.
    For projective blocks the entry is read at the source block's generating
    vertex, for injective blocks at the target block's socle vertex.
    """
    coeffs = []
    for j, vt in enumerate(tgt_blocks):
        row = []
        for i, vs in enumerate(src_blocks):
            blk = tgt_projs[j].compose(h).compose(src_incls[i])
            read = vs if read_at_source else vt
            comp = blk.comps[read]
            if comp.m == 1 and comp.n == 1:
                row.append(comp.rows[0][0])
            else:
                row.append(0)
        coeffs.append(row)
    return coeffs


def _assemble_standard_map(q: Quiver, kind: str, src_blocks, tgt_blocks, coeffs) -> RepMor:
    """Sum of coefficient * canonical map over all block pairs."""
    make = rp.projective_rep if kind == "P" else rp.injective_rep
    canon = rp.standard_projective_map if kind == "P" else rp.standard_injective_map
    src, src_incls, src_projs = rp.direct_sum([make(q, v) for v in src_blocks], q)
    tgt, tgt_incls, tgt_projs = rp.direct_sum([make(q, v) for v in tgt_blocks], q)
    total = RepMor.zero(src, tgt)
    for j, vt in enumerate(tgt_blocks):
        for i, vs in enumerate(src_blocks):
            c = coeffs[j][i]
            if c and q.reaches(vt, vs):
                piece = tgt_incls[j].compose(canon(q, vs, vt, c)).compose(src_projs[i])
                total = total + piece
    return total


def tau_inverse(m: Rep) -> Optional[Rep]:
    """Inverse AR translate; None when m is injective."""
    hull0 = rp.injective_hull(m)
    parts0 = rp.morphism_parts(hull0.map)
    coker = parts0.cokernel
    if coker.is_zero():
        return None
    g0 = parts0.coker_proj
    hull1 = rp.injective_hull(coker)
    g = hull1.map.compose(g0)  # I0 -> I1
    coeffs = _block_coefficients(g, hull0.blocks, hull0.incls,
                                 hull1.blocks, hull1.projs, read_at_source=False)
    h = _assemble_standard_map(m.quiver, "P", hull0.blocks, hull1.blocks, coeffs)
    return rp.morphism_parts(h).cokernel


def tau(m: Rep) -> Optional[Rep]:
    """AR translate; None when m is projective."""
    cover0 = rp.projective_cover(m)
    parts0 = rp.morphism_parts(cover0.map)
    kernel = parts0.kernel
    if kernel.is_zero():
        return None
    cover1 = rp.projective_cover(kernel)
    h = parts0.kernel_incl.compose(cover1.map)  # P1 -> P0
    coeffs = _block_coefficients(h, cover1.blocks, cover1.incls,
                                 cover0.blocks, cover0.projs, read_at_source=True)
    g = _assemble_standard_map(m.quiver, "I", cover1.blocks, cover0.blocks, coeffs)
    return rp.morphism_parts(g).kernel


# ---------------------------------------------------------------------------
# the table

@dataclass
class IndecEntry:
    index: int
    id: str
    dims: tuple
    rep: Rep
    orbit_vertex: int     # the projective this entry descends from
    orbit_pos: int        # number of inverse translates applied
    is_projective: bool
    is_injective: bool
    is_simple: bool


class IndecTable:
    """All indecomposables of a Dynkin quiver, with stable ids.

    Ids prefer the structural names: P<v> for projectives, then S<v> for
    simples, then I<v> for injectives, and X<dimvector> otherwise.  Aliases
    map every applicable structural name to the chosen id.
    """

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.entries = []
        self.by_id = {}
        self.by_dims = {}
        self.aliases = {}
        self._build()

    def _build(self) -> None:
        q = self.quiver
        simples = {tuple(rp.simple_rep(q, v).dims): v for v in range(q.n)}
        inj_dims = {tuple(rp.injective_rep(q, v).dims): v for v in range(q.n)}

        frontier = [(v, rp.projective_rep(q, v)) for v in range(q.n)]
        pos = 0
        while frontier:
            for (v, rep) in frontier:
                dims = tuple(rep.dims)
                if dims in self.by_dims:
                    raise RuntimeError("duplicate dimension vector in translate orbits")
                is_proj = pos == 0
                is_simp = dims in simples
                is_inj = dims in inj_dims
                if is_proj:
                    name = f"P{v + 1}"
                elif is_simp:
                    name = f"S{simples[dims] + 1}"
                elif is_inj:
                    name = f"I{inj_dims[dims] + 1}"
                else:
                    name = "X" + "".join(str(d) for d in dims)
                entry = IndecEntry(len(self.entries), name, dims, rep,
                                   v, pos, is_proj, is_inj, is_simp)
                self.entries.append(entry)
                self.by_id[name] = entry
                self.by_dims[dims] = entry
                if is_proj:
                    self.aliases[f"P{v + 1}"] = name
                if is_simp:
                    self.aliases.setdefault(f"S{simples[dims] + 1}", name)
                if is_inj:
                    self.aliases.setdefault(f"I{inj_dims[dims] + 1}", name)
                self.aliases.setdefault(name, name)
            nxt = []
            for (v, rep) in frontier:
                out = tau_inverse(rep)
                if out is not None:
                    nxt.append((v, out))
            frontier = nxt
            pos += 1

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, id_or_alias: str) -> IndecEntry:
        key = self.aliases.get(id_or_alias)
        if key is None:
            raise KeyError(f"unknown indecomposable {id_or_alias!r}")
        return self.by_id[key]

    def projectives(self) -> list:
        return [e for e in self.entries if e.is_projective]

    def identify(self, rep: Rep) -> Optional[str]:
        """Id of the indecomposable isomorphic to rep, or None.

        Dimension vectors select the candidate; the split pairing confirms
        the isomorphism (a decomposable representation with a root dimension
        vector fails the pairing).
        """
        entry = self.by_dims.get(tuple(rep.dims))
        if entry is None:
            return None
        if _find_split(entry.rep, rep) is None:
            return None
        return entry.id


def _scalar_of_endo(f: RepMor):
    """The scalar c with f = c * id, or None when f is not scalar."""
    c = None
    for v in range(f.src.quiver.n):
        comp = f.comps[v]
        if comp.n == 0:
            continue
        cand = comp.rows[0][0]
        ident = la.QM.identity(comp.n).scaled(cand)
        if comp != ident:
            return None
        if c is None:
            c = cand
        elif c != cand:
            return None
    return c


def _find_split(indec: Rep, x: Rep):
    """(phi, psi) with psi o phi = id on indec, or None.

    Searches the pairing Hom(indec, x) x Hom(x, indec) -> End(indec) for a
    nonzero value; End(indec) is one dimensional here, so any nonzero pair
    can be normalized.
    """
    if any(a > b for a, b in zip(indec.dims, x.dims)):
        return None
    fwd = rp.hom_basis(indec, x)
    if not fwd:
        return None
    bwd = rp.hom_basis(x, indec)
    for phi in fwd:
        for psi in bwd:
            comp = psi.compose(phi)
            c = _scalar_of_endo(comp)
            if c:
                return phi, psi.scaled(la.Fraction(1) / c)
    return None


def decompose(x: Rep, table: IndecTable) -> dict:
    """Multiset of indecomposable summands of x, as {id: multiplicity}.

    Peels split summands via the idempotent phi o psi; Krull-Schmidt makes
    the result independent of the peeling order.
    """
    out = {}
    current = x
    while not current.is_zero():
        found = False
        for entry in table.entries:
            pair = _find_split(entry.rep, current)
            if pair is None:
                continue
            phi, psi = pair
            out[entry.id] = out.get(entry.id, 0) + 1
            idem = phi.compose(psi)  # current -> current, image = the summand
            current = rp.morphism_parts(idem).kernel
            found = True
            break
        if not found:
            raise RuntimeError("representation has no summand from the table; "
                               "is it a representation of the right quiver?")
    return out
