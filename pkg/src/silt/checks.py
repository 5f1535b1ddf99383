"""Verification suites over concrete oriented Dynkin diagrams.

Every suite recomputes one family of identities by two independent routes
and returns a Report of exact comparisons: homotopy hom spaces against
blockwise predictions, enumeration counts against reflection/product
oracles, radical arrow counts against approximation multiplicities, and
module-level dimension identities over endomorphism algebras.
"""

from __future__ import annotations

import os
import random
from typing import Optional, Sequence

from . import linalg as la
from .derived import ChainMap, Complex, DerivedCategory, StalkSum, degree
from .endo import (EndoAlgebra, factoring_dim, g_module, g_morphism,
                   global_dimension, module_hom_dim, quotient_dims)
from .quiver import Quiver
from .report import Report
from .reps import RepMor, euler_form
from .silting import (candidate_stalks, complement_chain, enumerate_silting,
                      is_connected, minimal_left_approx, minimal_right_approx,
                      mutate, silting_quiver, window_complements)

_fmt = StalkSum.format_entry


# ---------------------------------------------------------------------------
# independent counting oracles

def positive_root_count(q: Quiver) -> int:
    """Positive roots of the underlying diagram, counted from scratch by
    closing the simple roots under the simple reflections."""
    n = q.n
    adj = [[0] * n for _ in range(n)]
    for u, v in q.arrows:
        adj[u][v] += 1
        adj[v][u] += 1

    def reflect(vec, i):
        out = list(vec)
        out[i] = sum(adj[i][j] * vec[j] for j in range(n)) - vec[i]
        return tuple(out)

    roots = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
    frontier = list(roots)
    while frontier:
        fresh = []
        for v in frontier:
            for i in range(n):
                w = reflect(v, i)
                if w not in roots:
                    roots.add(w)
                    fresh.append(w)
        frontier = fresh
    return sum(1 for v in roots if all(c >= 0 for c in v))


def _degrees_and_coxeter(family: str, n: int) -> tuple:
    if family == "A":
        return list(range(1, n + 1)), n + 1
    if family == "D":
        exps = list(range(1, 2 * n - 2, 2)) + [n - 1]
        return sorted(exps), 2 * n - 2
    if family == "E":
        table = {
            6: ([1, 4, 5, 7, 8, 11], 12),
            7: ([1, 5, 7, 9, 11, 13, 17], 18),
            8: ([1, 7, 11, 13, 17, 19, 23, 29], 30),
        }
        return table[n]
    raise ValueError(f"unknown family {family!r}")


def generalized_count(family: str, n: int, m: int) -> int:
    """Product-formula count of basic maximal rigid objects in the degree
    window, the independent oracle for the enumeration suite."""
    exps, h = _degrees_and_coxeter(family, n)
    num, den = 1, 1
    for e in exps:
        num *= m * h + e + 1
        den *= e + 1
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# hom consistency

def hom_consistency_suite(d: DerivedCategory, m: int) -> Report:
    """Blockwise hom predictions against homotopy computations, the Euler
    pairing identity, and the indecomposable count oracle."""
    q = d.quiver
    rep = Report(f"consistency {q.label} m={m}")
    inst = f"{q.label} m={m}"

    rep.add("indec.count", q.label, positive_root_count(q), len(d.table))

    cands = candidate_stalks(d, m)
    bad = 0
    for a in cands:
        for b in cands:
            want = d.stalk_hom_dim(a, b)
            got = d.hom_dim(d.stalk_complex(*a), d.stalk_complex(*b))
            if want != got:
                rep.add("hom.blockwise", f"{inst} {_fmt(a)} -> {_fmt(b)}",
                        want, got)
                bad += 1
    rep.add("hom.blockwise.all", f"{inst} ({len(cands)}^2 ordered pairs)",
            0, bad, data={"pairs": len(cands) ** 2})

    ids = [e.id for e in d.table.entries]
    bad = 0
    for a in ids:
        for b in ids:
            da = d.table.entry(a).rep.dims
            db = d.table.entry(b).rep.dims
            want = euler_form(q, da, db)
            got = d.module_hom_dim(a, b) - d.module_ext_dim(a, b)
            if want != got:
                rep.add("hom.euler", f"{q.label} {a} -> {b}", want, got)
                bad += 1
    rep.add("hom.euler.all", f"{q.label} ({len(ids)}^2 ordered pairs)",
            0, bad, data={"pairs": len(ids) ** 2})
    return rep


# ---------------------------------------------------------------------------
# enumeration and the exchange graph

def silting_graph_suite(d: DerivedCategory, m: int,
                        objects: Optional[Sequence] = None) -> Report:
    """Enumeration count against the product oracle and connectivity of the
    mutation graph."""
    q = d.quiver
    rep = Report(f"exchange graph {q.label} m={m}")
    inst = f"{q.label} m={m}"
    if objects is None:
        objects = enumerate_silting(d, m)
    rep.add("silting.count", inst,
            generalized_count(q.family, q.n, m), len(objects))
    _, edges = silting_quiver(d, m, objects)
    rep.add("silting.connected", inst, True,
            is_connected(len(objects), edges),
            data={"vertices": len(objects), "edges": len(edges)})
    return rep


def involution_suite(d: DerivedCategory, m: int,
                     objects: Optional[Sequence] = None) -> Report:
    """Mutating left then right at the exchanged summand (and vice versa)
    must return the original object, at every position of every object."""
    q = d.quiver
    rep = Report(f"involution {q.label} m={m}")
    inst = f"{q.label} m={m}"
    if objects is None:
        objects = enumerate_silting(d, m)
    bad = 0
    total = 0
    for obj in objects:
        for pos in range(len(obj)):
            for first in ("left", "right"):
                second = "right" if first == "left" else "left"
                t2, tri = mutate(d, obj, pos, first)
                back, _ = mutate(d, t2, t2.entries.index(tri.added), second)
                total += 1
                if back != obj:
                    bad += 1
                    rep.add("mutation.involution",
                            f"{inst} {obj.pretty()} at {_fmt(obj.entries[pos])} {first}",
                            obj.pretty(), back.pretty())
    rep.add("mutation.involution.all", f"{inst} ({total} round trips)",
            0, bad, data={"round_trips": total})
    return rep


# ---------------------------------------------------------------------------
# the derived equivalence dimension identities

def _identity_chain(cx: Complex) -> ChainMap:
    return ChainMap(cx, cx, {i: RepMor.identity(t) for i, t in cx.terms.items()},
                    check=False)


def _exhaustive_maps(d: DerivedCategory, t: StalkSum) -> list:
    """Zero maps, all hom basis maps and identities between single summands."""
    out = []
    for a in t.entries:
        sa = d.stalk_complex(*a)
        for b in t.entries:
            sb = d.stalk_complex(*b)
            out.append((f"0: {_fmt(a)} -> {_fmt(b)}", ChainMap.zero(sa, sb)))
            for p, f in enumerate(d.hom(sa, sb).reps):
                out.append((f"b{p}: {_fmt(a)} -> {_fmt(b)}", f))
        out.append((f"id: {_fmt(a)}", _identity_chain(sa)))
    return out


def _sampled_maps(d: DerivedCategory, t: StalkSum, seed: int, count: int) -> list:
    """Seeded random maps between small sums of summands of t."""
    rng = random.Random(f"{seed}:{d.quiver.label}:{t.pretty()}")
    out = []
    for i in range(count):
        src = StalkSum([rng.choice(t.entries)
                        for _ in range(rng.randint(1, 2))])
        tgt = StalkSum([rng.choice(t.entries)
                        for _ in range(rng.randint(1, 2))])
        src_cx, tgt_cx = d.present(src), d.present(tgt)
        hs = d.hom(src_cx, tgt_cx)
        coords = [rng.randint(-2, 2) for _ in range(hs.dim)]
        f = hs.from_coords(coords) if hs.dim else ChainMap.zero(src_cx, tgt_cx)
        out.append((f"s{i}: {src.pretty()} -> {tgt.pretty()}", f))
    return out


def equivalence_object_report(d: DerivedCategory, t: StalkSum, m: int,
                              seed: int = 0, samples: int = 15) -> Report:
    """Dimension identities of the hom functor into End(t)-modules.

    For each generated map g between sums of summands of t: the module of
    maps out of t into cone(g) has the rank-nullity dimension; for pairs of
    such cones, module homs equal derived homs minus maps factoring through
    the once-shifted summands.
    """
    q = d.quiver
    rep = Report(f"equivalence {q.label} m={m} T={t.pretty()}")
    inst = f"{q.label} m={m} T={t.pretty()}"
    alg = EndoAlgebra.of_sum(d, t)
    exhaustive = q.n <= 2
    if exhaustive:
        gens = _exhaustive_maps(d, t)
    else:
        gens = _sampled_maps(d, t, seed, samples)

    shifted = t.shifted(1)
    cones = []
    bad_density = 0
    for name, g in gens:
        src_mod = g_module(alg, g.src)
        tgt_mod = g_module(alg, g.tgt)
        gm = g_morphism(alg, g, src_mod, tgt_mod)
        cone_cx = d.cone(g)
        cone_mod = g_module(alg, cone_cx)
        want = tgt_mod.dim - la.rank(gm)
        if want != cone_mod.dim:
            rep.add("equivalence.density", f"{inst} {name}", want, cone_mod.dim)
            bad_density += 1
        cones.append((name, cone_cx, cone_mod))
    rep.add("equivalence.density.all", f"{inst} ({len(gens)} maps)",
            0, bad_density, data={"samples": len(gens)})

    if exhaustive:
        pairs = [(x, y) for x in cones for y in cones]
    else:
        pairs = [(cones[i], cones[(i + 1) % len(cones)])
                 for i in range(len(cones))]
    bad_hom = 0
    for (na, ca, ma), (nb, cb, mb) in pairs:
        lhs = module_hom_dim(ma, mb)
        rhs = d.hom(ca, cb).dim - factoring_dim(d, ca, cb, shifted)
        if lhs != rhs:
            rep.add("equivalence.hom", f"{inst} [{na}] -> [{nb}]", rhs, lhs)
            bad_hom += 1
    rep.add("equivalence.hom.all", f"{inst} ({len(pairs)} pairs)",
            0, bad_hom, data={"pairs": len(pairs)})
    return rep


def equivalence_suite(d: DerivedCategory, m: int, seed: int = 0,
                      samples: int = 15,
                      objects: Optional[Sequence] = None) -> Report:
    rep = Report(f"equivalence {d.quiver.label} m={m}")
    if objects is None:
        objects = enumerate_silting(d, m)
    for t in objects:
        rep.extend(equivalence_object_report(d, t, m, seed, samples))
    return rep


# ---------------------------------------------------------------------------
# exchange triangles and simple modules over the completed algebra

def cores_from_objects(d: DerivedCategory, m: int,
                       objects: Optional[Sequence] = None) -> list:
    """Distinct almost complete objects: drop one summand in every way."""
    if objects is None:
        objects = enumerate_silting(d, m)
    seen = set()
    out = []
    for obj in objects:
        for i in range(len(obj)):
            core = obj.remove_at(i)
            if core not in seen:
                seen.add(core)
                out.append(core)
    return out


def exchange_simples_report(d: DerivedCategory, core: StalkSum, m: int,
                            wlo: int = -2, whi: Optional[int] = None) -> Report:
    """Per-index checks along the complement chain of one core.

    At each index j in [wlo, whi]: the exchange hom onto the previous
    complement shifted once is one dimensional and supported at the new
    summand; the induced map of hom modules over End(complement + core) has
    the simple at the new summand as cokernel; complements beyond index m
    have no homs with the core either way; outside [-1, m+1] the chain is a
    shift of its boundary entries.
    """
    if whi is None:
        whi = m + 3
    q = d.quiver
    rep = Report(f"exchange simples {q.label} m={m} core={core.pretty()}")
    base = f"{q.label} m={m} core={core.pretty()}"
    rep.add("window.count", base, m + 1, len(window_complements(d, core, m)))
    chain = complement_chain(d, core, m, lo=wlo - 1, hi=whi)
    for j in range(wlo, whi + 1):
        mj = chain.entries[j]
        prev = chain.entries[j - 1]
        inst = f"{base} j={j}"
        prev1 = (prev[0], prev[1] + 1)
        rep.add("exchange.hom.new", inst, 1, d.stalk_hom_dim(mj, prev1))
        rep.add("exchange.hom.core", inst, 0,
                sum(d.stalk_hom_dim(c, prev1) for c in core))

        tri = chain.triangles[j - 1]
        alg = EndoAlgebra.of_sum(d, core.add(mj))
        b_mod = g_module(alg, tri.g.src)
        x_mod = g_module(alg, tri.g.tgt)
        gm = g_morphism(alg, tri.g, b_mod, x_mod)
        coker = quotient_dims(x_mod, gm.columns())
        want = [0] * alg.k
        want[alg.summand_index(mj)] = 1
        rep.add("exchange.simple.coker", inst, want, coker)
        # the induced sequence is right exact; a nonzero kernel of the
        # induced map is possible and recorded as information only
        rep.finding("exchange.simple.left_exact", inst, 0,
                    b_mod.dim - la.rank(gm))

        if j > m:
            rep.add("split.blocks", inst, 0,
                    sum(d.stalk_hom_dim(mj, c) + d.stalk_hom_dim(c, mj)
                        for c in core))
        if j < -1:
            lowrep = chain.entries[-1]
            rep.add("periodicity.low", inst,
                    _fmt((lowrep[0], lowrep[1] + j + 1)), _fmt(mj))
        if j > m + 1:
            highrep = chain.entries[m + 1]
            rep.add("periodicity.high", inst,
                    _fmt((highrep[0], highrep[1] + j - (m + 1))), _fmt(mj))
    return rep


def exchange_simples_suite(d: DerivedCategory, m: int, wlo: int = -2,
                           whi: Optional[int] = None,
                           cores: Optional[Sequence] = None) -> Report:
    rep = Report(f"exchange simples {d.quiver.label} m={m}")
    if cores is None:
        cores = cores_from_objects(d, m)
    for core in cores:
        rep.extend(exchange_simples_report(d, core, m, wlo, whi))
    return rep


# ---------------------------------------------------------------------------
# endomorphism quiver shape and global dimension

def resolve_cutoff(n: int, m: int, cutoff: Optional[int] = None) -> int:
    """Syzygy cutoff: explicit argument, then SILT_CUTOFF, then 2mn + 2."""
    if cutoff is not None:
        return cutoff
    env = os.environ.get("SILT_CUTOFF")
    if env:
        return int(env)
    return 2 * m * n + 2


def has_directed_cycle(arrow_counts: Sequence[Sequence[int]]) -> bool:
    k = len(arrow_counts)
    state = [0] * k  # 0 unseen, 1 on stack, 2 done

    def visit(v):
        state[v] = 1
        for w in range(k):
            if arrow_counts[v][w] > 0:
                if state[w] == 1:
                    return True
                if state[w] == 0 and visit(w):
                    return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in range(k))


def endo_shape_report(d: DerivedCategory, t: StalkSum, m: int,
                      cutoff: Optional[int] = None) -> Report:
    """No loops, no 2-cycles, no directed cycles, finite global dimension."""
    q = d.quiver
    cut = resolve_cutoff(q.n, m, cutoff)
    rep = Report(f"endo shape {q.label} m={m} T={t.pretty()}")
    inst = f"{q.label} m={m} T={t.pretty()}"
    alg = EndoAlgebra.of_sum(d, t)
    arr = alg.radical_data().arrow_counts
    rep.add("endo.no_loops", inst, 0,
            sum(arr[a][a] for a in range(alg.k)))
    rep.add("endo.no_2cycles", inst, 0,
            sum(min(arr[a][b], arr[b][a])
                for a in range(alg.k) for b in range(a + 1, alg.k)))
    rep.add("endo.acyclic", inst, True, not has_directed_cycle(arr))
    gd = global_dimension(alg, cut)
    rep.add("endo.gldim.finite", inst, True, gd is not None,
            data={"value": gd, "cutoff": cut})
    return rep


def endo_shape_suite(d: DerivedCategory, m: int, cutoff: Optional[int] = None,
                     objects: Optional[Sequence] = None) -> Report:
    rep = Report(f"endo shape {d.quiver.label} m={m}")
    if objects is None:
        objects = enumerate_silting(d, m)
    for t in objects:
        rep.extend(endo_shape_report(d, t, m, cutoff))
    return rep


# ---------------------------------------------------------------------------
# arrow counts against approximation multiplicities

def arrow_identity_report(d: DerivedCategory, t: StalkSum, m: int) -> Report:
    """rad/rad^2 arrow counts must match minimal approximation multiplicities:
    arrows i -> j count copies of T_j in the left approximation of T_i into
    the rest, and arrows j -> i count copies in the right approximation."""
    q = d.quiver
    rep = Report(f"arrows {q.label} m={m} T={t.pretty()}")
    inst = f"{q.label} m={m} T={t.pretty()}"
    alg = EndoAlgebra.of_sum(d, t)
    arr = alg.radical_data().arrow_counts
    for i, s in enumerate(t.entries):
        rest = t.remove_at(i)
        left = minimal_left_approx(d, s, rest)
        right = minimal_right_approx(d, rest, s)
        for j, other in enumerate(t.entries):
            if j == i:
                continue
            rep.add("arrows.left", f"{inst} {_fmt(s)} -> {_fmt(other)}",
                    arr[i][j], left.mid.multiplicity(other))
            rep.add("arrows.right", f"{inst} {_fmt(other)} -> {_fmt(s)}",
                    arr[j][i], right.mid.multiplicity(other))
    return rep


def arrow_identity_suite(d: DerivedCategory, m: int,
                         objects: Optional[Sequence] = None) -> Report:
    rep = Report(f"arrows {d.quiver.label} m={m}")
    if objects is None:
        objects = enumerate_silting(d, m)
    for t in objects:
        rep.extend(arrow_identity_report(d, t, m))
    return rep
