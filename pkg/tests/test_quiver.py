import pytest

from silt.quiver import Quiver, dynkin_edges, parse_quiver


def test_parse_basic_labels():
    q = parse_quiver("A2")
    assert (q.family, q.n) == ("A", 2)
    assert q.arrows == ((0, 1),)
    assert q.label == "A2:>"

    q = parse_quiver("A3:><")
    assert q.arrows == ((0, 1), (2, 1))

    q = parse_quiver("A3:1>2<3")
    assert q.label == parse_quiver("A3:><").label

    q = parse_quiver("1>2<3")
    assert q.label == "A3:><"


def test_parse_d4():
    q = parse_quiver("D4")
    assert (q.family, q.n) == ("D", 4)
    assert len(q.arrows) == 3
    # central vertex sits on every edge
    flat = [v for a in q.arrows for v in a]
    center = max(set(flat), key=flat.count)
    assert flat.count(center) == 3


def test_parse_errors():
    for bad in ("Z9", "A1x", "A3:>>>", "A3:1>3>2", "D4:1>2<3", ""):
        with pytest.raises(ValueError):
            parse_quiver(bad)


def test_edges_are_trees():
    for label, n in (("A5", 5), ("D5", 5), ("E6", 6)):
        q = parse_quiver(label)
        assert len(q.arrows) == n - 1
        # connected: every vertex reachable from vertex 0 ignoring direction
        adj = {i: set() for i in range(n)}
        for u, w in q.arrows:
            adj[u].add(w)
            adj[w].add(u)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        assert seen == set(range(n))


def test_path_between():
    q = parse_quiver("A3:>>")
    assert q.path_between(0, 2) is not None
    assert q.path_between(2, 0) is None
    assert q.reaches(0, 0)


def test_orientation_must_match_edge_count():
    with pytest.raises(ValueError):
        Quiver("A", 3, [">"])
    edges = dynkin_edges("A", 3)
    assert edges == [(0, 1), (1, 2)]
