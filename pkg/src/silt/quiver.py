"""Dynkin quivers and orientation parsing.

A quiver here is an orientation of a simply laced Dynkin diagram (types A,
D, E).  Vertices are numbered 1..n in labels and 0..n-1 internally:

* ``An``: the chain 1 - 2 - ... - n.
* ``Dn`` (n >= 4): the chain 1 - 2 - ... - (n-2) with both n-1 and n
  attached to n-2.
* ``E6/E7/E8``: the chain 1 - 3 - 4 - 5 - 6 (- 7 - 8) with 2 attached to 4.

Labels take the form ``"A3"`` (default orientation: every edge points from
its lower-numbered endpoint to the higher one), ``"A3:>><"`` (one ``>`` or
``<`` per canonical edge, in the edge order above), or for type A the inline
chain form ``"A3:1>2>3"``.  Any orientation of a tree is acyclic, and
between two vertices there is at most one directed path; several algorithms
downstream rely on that.
"""

from __future__ import annotations

import re
from typing import Optional


def dynkin_edges(family: str, n: int) -> list:
    """Canonical edge list of the Dynkin diagram, 0-based vertex pairs."""
    if family == "A":
        if n < 1:
            raise ValueError("type A needs n >= 1")
        return [(i, i + 1) for i in range(n - 1)]
    if family == "D":
        if n < 4:
            raise ValueError("type D needs n >= 4")
        edges = [(i, i + 1) for i in range(n - 3)]
        edges.append((n - 3, n - 2))
        edges.append((n - 3, n - 1))
        return edges
    if family == "E":
        if n not in (6, 7, 8):
            raise ValueError("type E needs n in {6, 7, 8}")
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        edges = [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        edges.append((1, 3))
        return edges
    raise ValueError(f"unknown Dynkin family {family!r}")


class Quiver:
    """An oriented Dynkin diagram.

    Attributes:
        family: one of "A", "D", "E".
        n: number of vertices.
        arrows: tuple of (src, tgt) pairs, 0-based, in canonical edge order.
        label: normalized label, e.g. "A3:>>".
    """

    def __init__(self, family: str, n: int, directions: list):
        edges = dynkin_edges(family, n)
        if len(directions) != len(edges):
            raise ValueError("one direction per edge required")
        self.family = family
        self.n = n
        arrows = []
        for (u, v), d in zip(edges, directions):
            if d == ">":
                arrows.append((u, v))
            elif d == "<":
                arrows.append((v, u))
            else:
                raise ValueError(f"bad direction {d!r}")
        self.arrows = tuple(arrows)
        self.label = f"{family}{n}:" + "".join(directions)
        self.outgoing = [[] for _ in range(n)]
        self.incoming = [[] for _ in range(n)]
        for idx, (s, t) in enumerate(self.arrows):
            self.outgoing[s].append(idx)
            self.incoming[t].append(idx)
        self._desc = None
        self._path = None

    def __repr__(self) -> str:
        return f"Quiver({self.label})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Quiver) and self.label == other.label

    def __hash__(self):
        return hash(self.label)

    def _reach(self) -> None:
        # unique directed path between any two vertices of a tree, if any
        n = self.n
        path = [[None] * n for _ in range(n)]
        for v in range(n):
            path[v][v] = []
            stack = [v]
            while stack:
                u = stack.pop()
                for a in self.outgoing[u]:
                    w = self.arrows[a][1]
                    if path[v][w] is None:
                        path[v][w] = path[v][u] + [a]
                        stack.append(w)
        self._path = path
        self._desc = [frozenset(w for w in range(n) if path[v][w] is not None) for v in range(n)]

    def path_between(self, u: int, w: int) -> Optional[list]:
        """Arrow indices of the directed path u -> w, or None; [] when u == w."""
        if self._path is None:
            self._reach()
        return self._path[u][w]

    def reaches(self, u: int, w: int) -> bool:
        if self._desc is None:
            self._reach()
        return w in self._desc[u]


_LABEL_RE = re.compile(r"^([ADEade])(\d+)(?::(.*))?$")


def parse_quiver(label: str) -> Quiver:
    """Parse a quiver label like "A3", "A3:1>2>3", or "D4:>><".

    Raises:
        ValueError: malformed label, unsupported family/size, or an
            orientation string that does not match the diagram.
    """
    label = label.strip()
    m = _LABEL_RE.match(label)
    if not m:
        # bare chain form "1>2<3" is shorthand for the type A label
        tokens = re.findall(r"\d+|[<>]", label)
        if (tokens and "".join(tokens) == label
                and len(tokens) % 2 == 1 and tokens[0].isdigit()):
            n = (len(tokens) + 1) // 2
            return parse_quiver(f"A{n}:{label}")
        raise ValueError(f"cannot parse quiver label {label!r}")
    family = m.group(1).upper()
    n = int(m.group(2))
    orient = m.group(3)
    edges = dynkin_edges(family, n)
    if orient is None or orient == "":
        return Quiver(family, n, [">"] * len(edges))
    if re.fullmatch(r"[<>]+", orient):
        if len(orient) != len(edges):
            raise ValueError(
                f"{ family }{n} has {len(edges)} edges, got {len(orient)} directions"
            )
        return Quiver(family, n, list(orient))
    # inline chain form, type A only: "1>2<3..."
    if family != "A":
        raise ValueError("inline vertex orientation is only defined for type A")
    tokens = re.findall(r"\d+|[<>]", orient)
    if len(tokens) != 2 * n - 1:
        raise ValueError(f"bad chain orientation {orient!r} for A{n}")
    verts = tokens[0::2]
    dirs = tokens[1::2]
    if verts != [str(i + 1) for i in range(n)]:
        raise ValueError("chain orientation must list vertices 1..n in order")
    if not all(d in "<>" for d in dirs):
        raise ValueError("expected > or < between vertices")
    return Quiver(family, n, list(dirs))
