"""Explicit labelings for the graph families, one constructor per result.

Each constructor returns (digraph, labeling) where the labeling lands in a
known weight class:

* path:       saml  -> alternating orientation, arc-magic with mu = n
              sa-al -> forward, arc weights n+2 .. 2n (difference 1)
              sv-al -> forward, vertex weights n .. 2n-1
* cycle:      sa-sv-al -> arc weights n+1..2n and vertex weights 1..n at once
* star:       saml  -> out, arc-magic with mu = 2(n+1)
              sa-al -> in, arc weights 2n+2, 2n+4, .., 4n (difference 2)
              sval  -> in, vertex weights {1,3,..,2n-1} plus (n+1)(n+2)/2
                       at the center; all distinct
* wheel:      sval  -> rim weights {n+1, n+3, .., 3n-1}, center (n+1)(n+2)/2
* tadpole:    saal  -> arc weights cover n+t+1 .. 2n+2t+1 except 2n+t+1
              sv-al -> vertex weights n+t+1 .. 2n+2t
* friendship: sa-al -> arc weights 2n+2 .. 5n+1
* butterfly:  sa-al -> arc weights 2n .. 4n-1
              sval  -> vertex weights {3} plus 2n+3 .. 4n

The path sa-al arc labels are 2n-i.  The 2n+1-i variant sometimes quoted
for this family is not a total labeling at all: it uses the value 2n,
which exceeds the label range 1..2n-1, and skips n+1.  The verifier
rejects it, and a regression test keeps it rejected.
"""

from __future__ import annotations

from .digraph import Digraph, ParameterError, build_family
from .labeling import TotalLabeling, validate_labeling


class GracefulInputError(ValueError):
    """The tree/labeling pair handed to the graceful conversion is invalid."""


CONSTRUCTION_KINDS: dict[str, tuple[str, ...]] = {
    "path": ("saml", "sa-al", "sv-al"),
    "cycle": ("sa-sv-al",),
    "star": ("saml", "sa-al", "sval"),
    "wheel": ("sval",),
    "tadpole": ("saal", "sv-al"),
    "friendship": ("sa-al",),
    "butterfly": ("sa-al", "sval"),
}


def _check_kind(family: str, kind: str):
    kinds = CONSTRUCTION_KINDS[family]
    if kind not in kinds:
        raise ParameterError(
            f"no {kind!r} construction for {family}; valid kinds: {', '.join(kinds)}")


def construct_path(n: int, kind: str) -> tuple[Digraph, TotalLabeling]:
    _check_kind("path", kind)
    if kind == "saml":
        g = build_family("path", n, orientation="alternating")
        vl = [(i + 1) // 2 if i % 2 == 1 else n + 1 - i // 2 for i in range(1, n + 1)]
        al = [2 * n - i for i in range(1, n)]
    elif kind == "sa-al":
        g = build_family("path", n, orientation="forward")
        vl = list(range(1, n + 1))
        al = [2 * n - i for i in range(1, n)]
    else:  # sv-al
        g = build_family("path", n, orientation="forward")
        vl = [2 * n - i for i in range(1, n + 1)]
        al = list(range(1, n))
    l = TotalLabeling(tuple(vl), tuple(al))
    validate_labeling(g, l)
    return g, l


def construct_cycle(n: int) -> tuple[Digraph, TotalLabeling]:
    """A single labeling that is arc-antimagic with weights n+1..2n and
    vertex-antimagic with weights 1..n at the same time."""
    g = build_family("cycle", n)
    vl = list(range(1, n + 1))
    al = [2 * n - i for i in range(1, n)] + [2 * n]
    l = TotalLabeling(tuple(vl), tuple(al))
    validate_labeling(g, l)
    return g, l


def construct_star(n: int, kind: str) -> tuple[Digraph, TotalLabeling]:
    _check_kind("star", kind)
    if kind == "saml":
        g = build_family("star", n, orientation="out")
        vl = [1] + [i + 1 for i in range(1, n + 1)]
        al = [2 * (n + 1) - i for i in range(1, n + 1)]
    elif kind == "sa-al":
        g = build_family("star", n, orientation="in")
        vl = [2 * n + 1] + list(range(1, n + 1))
        al = [2 * n + 1 - i for i in range(1, n + 1)]
    else:  # sval
        g = build_family("star", n, orientation="in")
        vl = [1] + [n + 1 + i for i in range(1, n + 1)]
        al = [n + 2 - i for i in range(1, n + 1)]
    l = TotalLabeling(tuple(vl), tuple(al))
    validate_labeling(g, l)
    return g, l


def construct_wheel(n: int) -> tuple[Digraph, TotalLabeling]:
    g = build_family("wheel", n)
    vl = [1] + [3 * n + 1 - i for i in range(1, n)] + [3 * n + 1]
    spokes = [i + 1 for i in range(1, n + 1)]
    rim = [n + 2 + i for i in range(1, n)] + [n + 2]
    l = TotalLabeling(tuple(vl), tuple(spokes + rim))
    validate_labeling(g, l)
    return g, l


def construct_tadpole(n: int, t: int, kind: str) -> tuple[Digraph, TotalLabeling]:
    _check_kind("tadpole", kind)
    g = build_family("tadpole", n, t=t)
    if kind == "saal":
        vl = [t + 1] + [n + t + 2 - i for i in range(2, n + 1)] + list(range(1, t + 1))
        ring = [n + t + i for i in range(1, n + 1)]
        # the path arc entering u_j (j = 2..t) carries 2n+2t+2-j; together
        # with the other blocks this fills 1..2n+2t exactly
        path = [2 * n + 2 * t + 2 - j for j in range(2, t + 1)]
        al = ring + path + [2 * n + t + 1]
    else:  # sv-al
        vl = [n + t + 1] + [2 * n + t + 2 - i for i in range(2, n + 1)]
        vl += [2 * n + 2 * t + 1 - i for i in range(1, t + 1)]
        al = [t + i for i in range(1, n + 1)] + list(range(1, t)) + [t]
    l = TotalLabeling(tuple(vl), tuple(al))
    validate_labeling(g, l)
    return g, l


def construct_friendship(n: int) -> tuple[Digraph, TotalLabeling]:
    g = build_family("friendship", n)
    vl = [1]
    al = []
    for i in range(1, n + 1):
        vl += [i + 1, n + 1 + i]
        al += [2 * n + 1 + i, 3 * n + 1 + i, 5 * n + 2 - i]
    l = TotalLabeling(tuple(vl), tuple(al))
    validate_labeling(g, l)
    return g, l


def construct_butterfly(n: int, kind: str) -> tuple[Digraph, TotalLabeling]:
    _check_kind("butterfly", kind)
    g = build_family("butterfly", n)
    if kind == "sa-al":
        v = [2 * n - 1 - 2 * i for i in range(1, n)]
        u = [2 * n - 2 * i for i in range(1, n)]
        x = 2 * n - 1
        a = [4 * n - 1 - 2 * i for i in range(1, n - 1)] + [2 * n + 1, 4 * n - 2]
        b = [4 * n - 2 - 2 * i for i in range(1, n - 1)] + [2 * n, 4 * n - 1]
    else:  # sval
        v = [2 * n - 1 + 2 * i for i in range(1, n)]
        u = [2 * n + 2 * i for i in range(1, n)]
        x = 4 * n - 1
        a = [2 * n - 1 - 2 * i for i in range(1, n)] + [2 * n - 1]
        b = [2 * n - 2 * i for i in range(1, n)] + [2 * n]
    l = TotalLabeling(tuple(v + u + [x]), tuple(a + b))
    validate_labeling(g, l)
    return g, l


def construct(family: str, n: int, kind: str, t: int | None = None) -> tuple[Digraph, TotalLabeling]:
    """Dispatch to the family constructor; validates the (family, kind) pair."""
    if family not in CONSTRUCTION_KINDS:
        raise ParameterError(
            f"unknown family {family!r}; expected one of {', '.join(CONSTRUCTION_KINDS)}")
    _check_kind(family, kind)
    if family == "path":
        return construct_path(n, kind)
    if family == "cycle":
        return construct_cycle(n)
    if family == "star":
        return construct_star(n, kind)
    if family == "wheel":
        return construct_wheel(n)
    if family == "tadpole":
        if t is None:
            raise ParameterError("tadpole requires the path length t")
        return construct_tadpole(n, t, kind)
    if family == "friendship":
        return construct_friendship(n)
    return construct_butterfly(n, kind)


def graceful_to_strong_saml(edges, phi) -> tuple[Digraph, TotalLabeling]:
    """Convert a gracefully labeled undirected tree into an arc-magic digraph.

    `edges` lists undirected edges over vertices 0..n-1 and `phi` maps each
    vertex to a distinct value in 1..n with edge differences exactly
    {1..n-1}.  Each edge is oriented from its larger-phi endpoint to its
    smaller-phi endpoint, keeps phi as the vertex labels, and an edge with
    difference d gets arc label n+d.  Every arc weight is then n, and the
    vertex labels occupy 1..n.
    """
    phi = list(phi)
    n = len(phi)
    if n < 1:
        raise GracefulInputError("tree must have at least one vertex")
    if sorted(phi) != list(range(1, n + 1)):
        raise GracefulInputError(f"phi is not a bijection onto 1..{n}")
    edges = [(int(x), int(y)) for x, y in edges]
    if len(edges) != n - 1:
        raise GracefulInputError(f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}")
    adjacent = [[] for _ in range(n)]
    for x, y in edges:
        if not (0 <= x < n and 0 <= y < n) or x == y:
            raise GracefulInputError(f"edge ({x},{y}) is not a valid tree edge")
        adjacent[x].append(y)
        adjacent[y].append(x)
    # n-1 edges + connected == tree
    seen = {0} if n else set()
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adjacent[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise GracefulInputError("edge list is not connected, so not a tree")
    diffs = sorted(abs(phi[x] - phi[y]) for x, y in edges)
    if diffs != list(range(1, n)):
        raise GracefulInputError(
            f"phi is not graceful: edge differences {diffs} != 1..{n - 1}")
    arcs = []
    al = []
    for x, y in edges:
        tail, head = (x, y) if phi[x] > phi[y] else (y, x)
        arcs.append((tail, head))
        al.append(n + abs(phi[x] - phi[y]))
    g = Digraph(n, tuple(arcs))
    l = TotalLabeling(tuple(phi), tuple(al))
    validate_labeling(g, l)
    return g, l
