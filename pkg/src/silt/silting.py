"""Silting objects in a degree window and their mutation combinatorics.

The staircase window S_m consists of module stalks in shifts 0..m-1 together
with projective stalks in shift m.  An object there is silting exactly when
it is basic, rigid (no homs into positive shifts of itself) and has as many
indecomposable summands as the quiver has vertices.

Rigidity between stalks reduces to two module-level conditions per ordered
pair: for summands (M, i) and (N, j),

    i > j   requires  Hom(M, N) = 0,
    j <= i  requires  Ext^1(M, N) = 0.

Mutation at a summand X replaces it by the third vertex of the exchange
triangle X -> B -> Y -> X[1] built from a minimal approximation into the
additive hull of the other summands.  Iterating mutation at the complement
of a fixed almost complete object yields the complement chain M_j, with
exactly m+1 members inside the window at indices 0..m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import linalg as la
from .derived import ChainMap, Complex, DerivedCategory, StalkSum, cone


# ---------------------------------------------------------------------------
# the degree window

def in_window(d: DerivedCategory, pair, m: int) -> bool:
    """Whether the stalk (id, shift) lies in the window S_m."""
    id_, s = pair
    if 0 <= s < m:
        return True
    if s == m:
        return d.table.entry(id_).is_projective
    return False


def candidate_stalks(d: DerivedCategory, m: int) -> list:
    """All stalks of the window S_m in canonical (shift, id) order."""
    if m < 1:
        raise ValueError("the degree window needs m >= 1")
    out = []
    for s in range(m):
        for e in d.table.entries:
            out.append((e.id, s))
    for e in d.table.entries:
        if e.is_projective:
            out.append((e.id, m))
    return sorted(out, key=lambda p: (p[1], p[0]))


# ---------------------------------------------------------------------------
# rigidity and the silting test

def pair_rigid(d: DerivedCategory, a, b) -> bool:
    """No homs a -> b[k] for k > 0, and none the other way around."""
    (ida, i), (idb, j) = a, b
    if i > j and d.module_hom_dim(ida, idb):
        return False
    if j <= i and d.module_ext_dim(ida, idb):
        return False
    if j > i and d.module_hom_dim(idb, ida):
        return False
    if i <= j and d.module_ext_dim(idb, ida):
        return False
    return True


def is_rigid(d: DerivedCategory, x: StalkSum) -> bool:
    entries = x.distinct()
    for k, a in enumerate(entries):
        if d.module_ext_dim(a[0], a[0]):
            return False
        for b in entries[k + 1:]:
            if not pair_rigid(d, a, b):
                return False
    return True


def is_silting_in_window(d: DerivedCategory, x: StalkSum, m: int) -> bool:
    if len(x) != d.n or not x.is_basic():
        return False
    if not all(in_window(d, p, m) for p in x):
        return False
    return is_rigid(d, x)


def enumerate_silting(d: DerivedCategory, m: int) -> list:
    """All silting objects in S_m, lexicographic in the candidate order."""
    cands = candidate_stalks(d, m)
    k = len(cands)
    ok = [d.module_ext_dim(c[0], c[0]) == 0 for c in cands]
    compat = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            compat[i][j] = compat[j][i] = pair_rigid(d, cands[i], cands[j])
    out = []
    chosen: list = []

    def extend(start: int) -> None:
        if len(chosen) == d.n:
            out.append(StalkSum([cands[i] for i in chosen]))
            return
        if len(chosen) + (k - start) < d.n:
            return
        for i in range(start, k):
            if ok[i] and all(compat[i][j] for j in chosen):
                chosen.append(i)
                extend(i + 1)
                chosen.pop()

    extend(0)
    return out


# ---------------------------------------------------------------------------
# minimal approximations

@dataclass
class ApproxResult:
    """A minimal approximation into the additive hull of `targets`.

    For the left version `map` goes source -> mid complex, for the right
    version mid complex -> target.  `mid` lists the summands with
    multiplicity; `mid_cx`, `incls`, `projs` realize it as a complex.
    """

    mid: StalkSum
    mid_cx: Complex
    map: ChainMap
    incls: list
    projs: list


def _entry_slots(mid: StalkSum, per_target: dict) -> list:
    """Align chosen per-target maps with the sorted entry positions of mid."""
    counters = {b: 0 for b in per_target}
    slots = []
    for entry in mid:
        idx = counters[entry]
        counters[entry] += 1
        slots.append(per_target[entry][idx])
    return slots


def minimal_left_approx(d: DerivedCategory, source, targets: StalkSum,
                        audit: str = "approx") -> ApproxResult:
    """Minimal left approximation of the stalk `source` into add(targets).

    Multiplicities come from generator counts of Hom(X, -) over the
    endomorphism ring of the target object: copies of b are a basis of
    Hom(X, b) modulo maps factoring through the other summands.
    """
    x_cx = d.stalk_complex(*source)
    distinct = targets.distinct()
    per_target = {}
    for b in distinct:
        hs_b = d.hom(x_cx, d.stalk_complex(*b))
        if hs_b.dim == 0:
            continue
        factored = []
        for c in distinct:
            if c == b:
                continue
            hs_c = d.hom(x_cx, d.stalk_complex(*c))
            if hs_c.dim == 0:
                continue
            hs_cb = d.hom(d.stalk_complex(*c), d.stalk_complex(*b))
            for w in hs_cb.reps:
                for v in hs_c.reps:
                    factored.append(hs_b.coords(w.compose(v)))
        chosen = [hs_b.from_coords(u)
                  for u in la.quotient_basis(hs_b.dim, factored)]
        if chosen:
            per_target[b] = chosen
    mid = StalkSum([b for b, maps in per_target.items() for _ in maps])
    mid_cx, incls, projs = d.present_with_io(mid)
    f = ChainMap.zero(x_cx, mid_cx)
    for pos, comp in enumerate(_entry_slots(mid, per_target)):
        f = f + incls[pos].compose(comp)
    res = ApproxResult(mid, mid_cx, f, incls, projs)
    _audit_approx(d, res, source, targets, side="left", level=audit)
    return res


def minimal_right_approx(d: DerivedCategory, targets: StalkSum, sink,
                         audit: str = "approx") -> ApproxResult:
    """Minimal right approximation add(targets) -> sink, dual to the left case."""
    y_cx = d.stalk_complex(*sink)
    distinct = targets.distinct()
    per_target = {}
    for b in distinct:
        hs_b = d.hom(d.stalk_complex(*b), y_cx)
        if hs_b.dim == 0:
            continue
        factored = []
        for c in distinct:
            if c == b:
                continue
            hs_c = d.hom(d.stalk_complex(*c), y_cx)
            if hs_c.dim == 0:
                continue
            hs_bc = d.hom(d.stalk_complex(*b), d.stalk_complex(*c))
            for v in hs_c.reps:
                for w in hs_bc.reps:
                    factored.append(hs_b.coords(v.compose(w)))
        chosen = [hs_b.from_coords(u)
                  for u in la.quotient_basis(hs_b.dim, factored)]
        if chosen:
            per_target[b] = chosen
    mid = StalkSum([b for b, maps in per_target.items() for _ in maps])
    mid_cx, incls, projs = d.present_with_io(mid)
    g = ChainMap.zero(mid_cx, y_cx)
    for pos, comp in enumerate(_entry_slots(mid, per_target)):
        g = g + comp.compose(projs[pos])
    res = ApproxResult(mid, mid_cx, g, incls, projs)
    _audit_approx(d, res, sink, targets, side="right", level=audit)
    return res


def _is_approximation(d: DerivedCategory, amap: ChainMap, targets: StalkSum,
                      side: str) -> bool:
    """Whether every map to/from a target summand factors through amap."""
    for c in targets.distinct():
        c_cx = d.stalk_complex(*c)
        if side == "left":
            want = d.hom(amap.src, c_cx)
            if want.dim == 0:
                continue
            have = d.hom(amap.tgt, c_cx)
            vecs = [want.coords(h.compose(amap)) for h in have.reps]
        else:
            want = d.hom(c_cx, amap.tgt)
            if want.dim == 0:
                continue
            have = d.hom(c_cx, amap.src)
            vecs = [want.coords(amap.compose(h)) for h in have.reps]
        if la.span_dim(vecs, want.dim) < want.dim:
            return False
    return True


def _audit_approx(d: DerivedCategory, res: ApproxResult, stalk, targets: StalkSum,
                  side: str, level: str) -> None:
    if level == "off":
        return
    if not _is_approximation(d, res.map, targets, side):
        raise RuntimeError(f"minimal {side} approximation audit failed")
    if level != "full":
        return
    # minimality: dropping any single copy must break the property
    slots = list(range(len(res.mid)))
    for pos in slots:
        sub = res.mid.remove_at(pos)
        sub_cx, incls, projs = d.present_with_io(sub)
        end = d.stalk_complex(*stalk)
        if side == "left":
            f = ChainMap.zero(end, sub_cx)
        else:
            f = ChainMap.zero(sub_cx, end)
        keep = [p for p in slots if p != pos]
        for new_pos, old_pos in enumerate(keep):
            if side == "left":
                part = res.projs[old_pos].compose(res.map)
                f = f + incls[new_pos].compose(part)
            else:
                part = res.map.compose(res.incls[old_pos])
                f = f + part.compose(projs[new_pos])
        if _is_approximation(d, f, targets, side):
            raise RuntimeError(f"{side} approximation is not minimal")


# ---------------------------------------------------------------------------
# mutation

@dataclass
class MutationTriangle:
    """The exchange triangle left -> mid -> right -> left[1].

    For a left mutation the removed summand sits at `left` and the new one
    at `right`; for a right mutation it is the other way around.  `left_cx`
    and `right_cx` realize the outer vertices as complexes (the new summand
    appears as an unreduced cone).
    """

    left: tuple
    mid: StalkSum
    right: tuple
    f: ChainMap
    g: ChainMap
    h: ChainMap
    left_cx: Complex
    right_cx: Complex
    removed: tuple
    added: tuple
    direction: str


def mutate(d: DerivedCategory, x: StalkSum, index: int, direction: str = "left",
           audit: str = "approx") -> tuple:
    """Mutate the silting object x at the given summand position.

    Returns (new object, exchange triangle).  The replacement summand is the
    cone (left) or shifted cone (right) over a minimal approximation; it is
    required to be a single indecomposable stalk.
    """
    if not 0 <= index < len(x):
        raise IndexError(f"summand index {index} out of range")
    if direction not in ("left", "right"):
        raise ValueError("direction must be 'left' or 'right'")
    old = x.entries[index]
    rest = x.remove_at(index)
    if direction == "left":
        ap = minimal_left_approx(d, old, rest, audit=audit)
        c, incl, proj = cone(ap.map)
        reduced = d.normalize(c)
        if len(reduced) != 1:
            raise RuntimeError(
                f"mutation cone is not indecomposable: {reduced.pretty()}")
        new = reduced.entries[0]
        tri = MutationTriangle(
            left=old, mid=ap.mid, right=new,
            f=ap.map, g=incl, h=proj,
            left_cx=ap.map.src, right_cx=c,
            removed=old, added=new, direction="left")
    else:
        ap = minimal_right_approx(d, rest, old, audit=audit)
        c, incl, proj = cone(ap.map)
        reduced = d.normalize(c)
        if len(reduced) != 1:
            raise RuntimeError(
                f"mutation cone is not indecomposable: {reduced.pretty()}")
        cid, cs = reduced.entries[0]
        new = (cid, cs - 1)
        # rotate B -> X -> C -> B[1] to C[-1] -> B -> X -> C
        tri = MutationTriangle(
            left=new, mid=ap.mid, right=old,
            f=(-proj).shifted(-1), g=ap.map, h=incl,
            left_cx=c.shifted(-1), right_cx=ap.map.tgt,
            removed=old, added=new, direction="right")
    return rest.add(tri.added), tri


# ---------------------------------------------------------------------------
# complement chains

@dataclass
class ComplementChain:
    """Complements of an almost complete object, indexed so that 0..m are
    the members inside S_m and left mutation raises the index by one."""

    core: StalkSum
    m: int
    lo: int
    hi: int
    entries: dict
    triangles: dict = field(repr=False)

    def pair(self, j: int):
        return self.entries[j]

    def silting_at(self, j: int) -> StalkSum:
        return self.core.add(self.entries[j])

    def indices(self) -> list:
        return sorted(self.entries)


def window_complements(d: DerivedCategory, core: StalkSum, m: int) -> list:
    """All stalks of S_m completing core to a silting object."""
    out = []
    for cand in candidate_stalks(d, m):
        if cand in core.entries:
            continue
        if is_silting_in_window(d, core.add(cand), m):
            out.append(cand)
    return out


def complement_chain(d: DerivedCategory, core: StalkSum, m: int,
                     lo: int = -2, hi: Optional[int] = None,
                     audit: str = "approx") -> ComplementChain:
    """Compute the complement chain of an almost complete silting object.

    `core` must have n-1 summands in S_m; the window [lo, hi] defaults to
    [-2, m+3].  Raises RuntimeError if the window complements do not line
    up as the theory demands (that would mean a bug, not bad input).
    """
    if hi is None:
        hi = m + 3
    if len(core) != d.n - 1 or not core.is_basic():
        raise ValueError("core must consist of n-1 distinct stalks")
    if not all(in_window(d, p, m) for p in core):
        raise ValueError("core must lie in the degree window")
    if not is_rigid(d, core):
        raise ValueError("core is not rigid")
    inside = window_complements(d, core, m)
    if len(inside) != m + 1:
        raise RuntimeError(
            f"expected {m + 1} window complements, found {len(inside)}")

    def step(cur, direction):
        t = core.add(cur)
        idx = t.entries.index(cur)
        new_t, tri = mutate(d, t, idx, direction, audit=audit)
        return tri.added, tri

    # walk right until the complement leaves the window: the last one inside
    # gets index 0
    cur = inside[0]
    for _ in range(m + 2):
        nxt, _ = step(cur, "right")
        if not in_window(d, nxt, m):
            break
        cur = nxt
    else:
        raise RuntimeError("right mutation never left the window")

    entries = {0: cur}
    triangles = {}
    j = 0
    while j < hi:
        nxt, tri = step(entries[j], "left")
        entries[j + 1] = nxt
        triangles[j] = tri
        j += 1
    j = 0
    while j > lo:
        prv, tri = step(entries[j], "right")
        entries[j - 1] = prv
        triangles[j - 1] = tri
        j -= 1

    got = sorted(entries[j] for j in range(0, m + 1))
    if got != sorted(inside):
        raise RuntimeError("chain walk and window complement scan disagree")
    return ComplementChain(core, m, lo, hi, entries, triangles)


# ---------------------------------------------------------------------------
# the exchange graph

def mutation_edges(d: DerivedCategory, m: int,
                   objects: Optional[Sequence] = None,
                   audit: str = "off") -> tuple:
    """Directed left-mutation arrows between window silting objects.

    Returns (objects, arrows); each arrow is a dict with the source and
    target object indices and the exchanged summands.
    """
    if objects is None:
        objects = enumerate_silting(d, m)
    index = {obj: i for i, obj in enumerate(objects)}
    arrows = []
    for i, obj in enumerate(objects):
        for pos in range(len(obj)):
            new_obj, tri = mutate(d, obj, pos, "left", audit=audit)
            j = index.get(new_obj)
            if j is not None and j != i:
                arrows.append({"src": i, "dst": j,
                               "removed": tri.removed, "added": tri.added})
    return list(objects), arrows


def silting_quiver(d: DerivedCategory, m: int, objects: Optional[Sequence] = None,
                   audit: str = "off") -> tuple:
    """Vertices and mutation edges of the silting exchange graph in S_m.

    Returns (objects, edges) with edges as sorted index pairs; an edge means
    one left mutation inside the window connects the two objects.
    """
    objects, arrows = mutation_edges(d, m, objects, audit)
    edges = {(min(a["src"], a["dst"]), max(a["src"], a["dst"]))
             for a in arrows}
    return objects, sorted(edges)


def is_connected(num_vertices: int, edges: Sequence) -> bool:
    if num_vertices == 0:
        return True
    adj = [[] for _ in range(num_vertices)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == num_vertices
