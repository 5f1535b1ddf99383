"""Degree-window tilting model and its bookkeeping.

The derived workbench models classical tilting over the layered algebra by
restricting complement chains to stalks of degree 0..m (the realizability
proxy) and treating the layered algebra's injective-projective summands as
formal markers that carry no hom spaces.  Bound violations of the proxy are
recorded as findings, never silently accepted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import linalg as la
from .derived import DerivedCategory, StalkSum, degree
from .endo import EndoAlgebra, g_module, g_morphism, quotient_dims
from .indecs import decompose
from .report import Report
from .reps import morphism_parts
from .silting import ComplementChain, complement_chain, enumerate_silting, in_window

_fmt = StalkSum.format_entry

FLAG_SHORT_EXACT = "short-exact"
FLAG_MEDIATED = "projective-injective-mediated"
FLAG_DEGREE_STEP = "degree-step"


@dataclass
class PairData:
    """One consecutive exchange pair of the realizable run."""

    left: tuple
    right: tuple
    ext1: int
    mid: StalkSum
    flag: str

    def to_json(self) -> dict:
        return {
            "left": _fmt(self.left),
            "right": _fmt(self.right),
            "ext1": self.ext1,
            "mid": self.mid.to_json(),
            "flag": self.flag,
        }


@dataclass
class ComplementChainReport:
    """The maximal run of degree-window complements of one core."""

    core: StalkSum
    m: int
    members: list
    degrees: list
    t: int
    start_index: int
    pairs: list
    chain: ComplementChain = field(repr=False)
    d: DerivedCategory = field(repr=False)

    @property
    def bound_ok(self) -> bool:
        return 2 * self.m <= self.t <= 2 * self.m + 1

    def to_json(self) -> dict:
        return {
            "core": self.core.to_json(),
            "m": self.m,
            "t": self.t,
            "bound_ok": self.bound_ok,
            "members": [{"name": _fmt(p), "degree": g}
                        for p, g in zip(self.members, self.degrees)],
            "pairs": [p.to_json() for p in self.pairs],
        }


def _pair_flag(d: DerivedCategory, left, right, mid: StalkSum) -> str:
    if degree(left) == degree(right):
        return FLAG_SHORT_EXACT
    if abs(degree(right) - degree(left)) == 1 and len(mid) == 0:
        return FLAG_MEDIATED
    return FLAG_DEGREE_STEP


def realizable_complements(d: DerivedCategory, core: StalkSum, m: int,
                           lo: int = -2,
                           hi: Optional[int] = None) -> ComplementChainReport:
    """Maximal consecutive run of chain complements with degree in [0, m].

    The run is renamed X_0..X_t; exchange data for consecutive pairs comes
    from the underlying mutation triangles.  A requested window only widens
    the default one; the run itself always lies inside it.
    """
    for p in core:
        if not 0 <= degree(p) <= m:
            raise ValueError(f"core summand {_fmt(p)} is not realizable")
    lo = min(lo, -2)
    hi = m + 3 if hi is None else max(hi, m + 3)
    chain = complement_chain(d, core, m, lo=lo, hi=hi)
    idxs = chain.indices()
    runs = []
    cur = []
    for j in idxs:
        if 0 <= degree(chain.entries[j]) <= m:
            cur.append(j)
        else:
            if cur:
                runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    best = max(runs, key=len) if runs else []
    members = [chain.entries[j] for j in best]
    if len(set(members)) != len(members):
        raise RuntimeError("realizable complements are not pairwise distinct")
    degrees = [degree(p) for p in members]
    pairs = []
    for pos in range(len(best) - 1):
        j = best[pos]
        tri = chain.triangles[j]
        left, right = chain.entries[j], chain.entries[j + 1]
        ext1 = d.stalk_hom_dim(right, (left[0], left[1] + 1))
        pairs.append(PairData(left, right, ext1, tri.mid,
                              _pair_flag(d, left, right, tri.mid)))
    return ComplementChainReport(
        core=core, m=m, members=members, degrees=degrees,
        t=len(members) - 1, start_index=best[0] if best else 0,
        pairs=pairs, chain=chain, d=d)


def exchange_report(crep: ComplementChainReport) -> Report:
    """Exchange checks along the realizable run.

    Same-degree pairs must come from short exact sequences of modules at
    that degree (middle summands at the degree, kernel zero, cokernel the
    next complement); every pair has a one dimensional exchange ext space.
    Degree-step pairs with empty middle are flagged as mediated by the
    formal injective-projective block.
    """
    d = crep.d
    rep = Report(f"exchange {d.quiver.label} m={crep.m} core={crep.core.pretty()}")
    base = f"{d.quiver.label} m={crep.m} core={crep.core.pretty()}"
    for pos, pd in enumerate(crep.pairs):
        inst = f"{base} X{pos}->X{pos + 1}"
        rep.add("model.exchange.ext1", inst, 1, pd.ext1,
                data={"flag": pd.flag})
        if pd.flag == FLAG_SHORT_EXACT:
            dg = degree(pd.left)
            rep.add("model.exchange.ses.mid_degree", inst, True,
                    all(degree(b) == dg for b in pd.mid),
                    data={"mid": pd.mid.pretty()})
            tri = crep.chain.triangles[crep.start_index + pos]
            hf = d.cohomology_map(tri.f, -dg)
            parts = morphism_parts(hf)
            rep.add("model.exchange.ses.kernel", inst, 0,
                    parts.kernel.total_dim())
            got = {id_: mult for id_, mult
                   in decompose(parts.cokernel, d.table).items()}
            rep.add("model.exchange.ses.coker", inst,
                    {pd.right[0]: 1}, got)
    return rep


def _algebra_summary(alg: EndoAlgebra) -> dict:
    return {
        "summands": [_fmt(p) for p in alg.summands],
        "dim": alg.dim,
        "cartan": alg.cartan(),
        "arrows": alg.radical_data().arrow_counts,
    }


def bb_condition_report(crep: ComplementChainReport, i: int) -> Report:
    """Necessary conditions for the one-step tilt between consecutive
    completed algebras: the candidate simple at the outgoing complement has
    no self-extensions (no loop at its vertex), the exchange ext space is a
    line, and the induced map's cokernel is the simple at the incoming
    complement over the next algebra.  Records both algebras side by side.
    """
    d = crep.d
    if not 0 <= i < crep.t:
        raise ValueError(f"pair index {i} out of range")
    core, m = crep.core, crep.m
    rep = Report(f"bb {d.quiver.label} m={m} core={core.pretty()} i={i}")
    inst = f"{d.quiver.label} m={m} core={core.pretty()} X{i}->X{i + 1}"
    xi, xnext = crep.members[i], crep.members[i + 1]
    alg_i = EndoAlgebra.of_sum(d, core.add(xi))
    alg_next = EndoAlgebra.of_sum(d, core.add(xnext))
    arr = alg_i.radical_data().arrow_counts
    v = alg_i.summand_index(xi)
    rep.add("bb.simple.no_self_ext", inst, 0, arr[v][v],
            data={"vertex": _fmt(xi)})
    rep.add("bb.exchange.ext1", inst, 1, crep.pairs[i].ext1)

    tri = crep.chain.triangles[crep.start_index + i]
    b_mod = g_module(alg_next, tri.g.src)
    x_mod = g_module(alg_next, tri.g.tgt)
    gm = g_morphism(alg_next, tri.g, b_mod, x_mod)
    coker = quotient_dims(x_mod, gm.columns())
    want = [0] * alg_next.k
    want[alg_next.summand_index(xnext)] = 1
    rep.add("bb.coker.simple", inst, want, coker,
            data={"gamma_i": _algebra_summary(alg_i),
                  "gamma_next": _algebra_summary(alg_next)})
    return rep


def bridge_consistency(d: DerivedCategory, t: StalkSum, m: int,
                       corrupt: bool = False) -> Report:
    """Adjoining the formal injective-projective markers and quotienting by
    maps through them must give back the plain endomorphism algebra.

    The markers carry no hom spaces by construction, so the factoring caps
    are zero and the quotient block dimensions agree; `corrupt` injects a
    fake marker hom to demonstrate the failure mode.
    """
    q = d.quiver
    rep = Report(f"bridge {q.label} m={m} T={t.pretty()}")
    inst = f"{q.label} m={m} T={t.pretty()}"
    alg = EndoAlgebra.of_sum(d, t)
    markers = [(v, s) for v in range(q.n) for s in range(1, m + 1)]
    rep.add("bridge.marker_count", inst, q.n * m, len(markers))
    to_marker = {}
    from_marker = {}
    if corrupt:
        to_marker[(0, 0)] = 1
        from_marker[(0, 0)] = 1
    rep.add("bridge.marker_homs_zero", inst, 0,
            sum(to_marker.values()) + sum(from_marker.values()))
    bad = 0
    for a in range(alg.k):
        for b in range(alg.k):
            full = alg.block_dims[(a, b)]
            cap = sum(to_marker.get((a, p), 0) * from_marker.get((p, b), 0)
                      for p in range(len(markers)))
            quotient = full - min(cap, full)
            if quotient != full:
                rep.add("bridge.block_dim", f"{inst} block ({a},{b})",
                        full, quotient)
                bad += 1
    rep.add("bridge.block_dim.all", f"{inst} ({alg.k}^2 blocks)", 0, bad)
    return rep


def model_object_report(d: DerivedCategory, core: StalkSum, m: int) -> Report:
    """Realizable run of one core: bound finding, exchange and tilt checks."""
    crep = realizable_complements(d, core, m)
    rep = Report(f"model {d.quiver.label} m={m} core={core.pretty()}")
    inst = f"{d.quiver.label} m={m} core={core.pretty()}"
    rep.finding("model.t_bound", inst, True, crep.bound_ok,
                data={"t": crep.t, "lo": 2 * m, "hi": 2 * m + 1})
    rep.extend(exchange_report(crep))
    for i in range(crep.t):
        rep.extend(bb_condition_report(crep, i))
    return rep


def model_suite(d: DerivedCategory, m: int,
                cores: Optional[Sequence] = None,
                objects: Optional[Sequence] = None) -> Report:
    from .checks import cores_from_objects
    rep = Report(f"model {d.quiver.label} m={m}")
    if objects is None:
        objects = enumerate_silting(d, m)
    if cores is None:
        cores = cores_from_objects(d, m, objects)
    for core in cores:
        rep.extend(model_object_report(d, core, m))
    for t in objects:
        rep.extend(bridge_consistency(d, t, m))
    return rep


def chain_text(crep: ComplementChainReport, wide: bool = True) -> str:
    """Plain text diagram: the chain window with degrees, window membership
    and the realizable run, then the per-pair exchange flags."""
    d = crep.d
    lines = [f"complement chain  core={crep.core.pretty()}  m={crep.m}  "
             f"window [{crep.chain.lo}, {crep.chain.hi}]"]
    lines.append(f"{'j':>4}  {'complement':<10} {'degree':>6}  S_m  model")
    run = {crep.start_index + i: i for i in range(crep.t + 1)}
    for j in crep.chain.indices():
        p = crep.chain.entries[j]
        star = "*" if in_window(d, p, crep.m) else " "
        model = f"X{run[j]}" if j in run else ""
        lines.append(f"{j:>4}  {_fmt(p):<10} {degree(p):>6}   {star}   {model}")
    bound = "ok" if crep.bound_ok else "violated"
    lines.append(f"t = {crep.t} (bound {2 * crep.m} <= t <= {2 * crep.m + 1}: {bound})")
    if crep.pairs and wide:
        lines.append("pairs:")
        for i, pd in enumerate(crep.pairs):
            mid = pd.mid.pretty() if len(pd.mid) else "{}"
            lines.append(f"  X{i} -> X{i + 1}: ext1={pd.ext1} {pd.flag} mid={mid}")
    return "\n".join(lines)
