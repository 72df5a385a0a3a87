"""Total labelings and their subtractive weights.

A total labeling assigns the labels 1..N (N = |V| + |A|) bijectively to
the vertices and arcs of a digraph.  The subtractive weight of an arc xy
is label(xy) + label(y) - label(x); the subtractive weight of a vertex x
is label(x) plus the labels of its incoming arcs minus the labels of its
outgoing arcs.  Weights are plain signed integers and may be <= 0.

A weight vector is classified as exactly one of:

* magic(mu)        -- all weights equal mu,
* arithmetic(a,d)  -- at least two weights, all distinct, and sorted they
                      are a, a+d, ..., a+(k-1)d with d >= 1,
* antimagic        -- all distinct but not an arithmetic progression,
* none             -- some repeated weight, not all equal.

An all-equal vector is always reported magic, never arithmetic with d=0.
An empty vector is reported magic with mu=None (vacuously constant).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .digraph import Digraph


class BijectionError(ValueError):
    """The labels do not form a bijection onto 1..|V|+|A|."""


@dataclass(frozen=True)
class TotalLabeling:
    vertex_labels: tuple[int, ...]
    arc_labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_labels", tuple(int(x) for x in self.vertex_labels))
        object.__setattr__(self, "arc_labels", tuple(int(x) for x in self.arc_labels))

    @property
    def label_count(self) -> int:
        return len(self.vertex_labels) + len(self.arc_labels)


@dataclass(frozen=True)
class WeightProfile:
    arc_weights: tuple[int, ...]
    vertex_weights: tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    kind: str  # "magic" | "arithmetic" | "antimagic" | "none"
    mu: int | None = None
    a: int | None = None
    d: int | None = None

    @classmethod
    def magic(cls, mu: int | None) -> "Verdict":
        return cls("magic", mu=mu)

    @classmethod
    def arithmetic(cls, a: int, d: int) -> "Verdict":
        return cls("arithmetic", a=a, d=d)

    @classmethod
    def antimagic(cls) -> "Verdict":
        return cls("antimagic")

    @classmethod
    def none(cls) -> "Verdict":
        return cls("none")

    def __str__(self) -> str:
        if self.kind == "magic":
            return f"magic (mu={self.mu})"
        if self.kind == "arithmetic":
            return f"arithmetic (a={self.a}, d={self.d})"
        return self.kind

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        for key in ("mu", "a", "d"):
            value = getattr(self, key)
            if value is not None:
                d[key] = value
        return d


@dataclass(frozen=True)
class Classification:
    arc_verdict: Verdict
    vertex_verdict: Verdict
    strong: bool        # vertex labels are exactly {1..|V|}
    strong_star: bool   # arc labels are exactly {1..|A|}

    def to_dict(self) -> dict:
        return {
            "arc": self.arc_verdict.to_dict(),
            "vertex": self.vertex_verdict.to_dict(),
            "strong": self.strong,
            "strong_star": self.strong_star,
        }


@dataclass(frozen=True)
class MuBound:
    """Bounds on the arc-magic constant from the longest directed circuit.

    With s the longest circuit length and N the label range size, any
    arc-magic constant mu satisfies (s+1)/2 <= mu <= (2N-s+1)/2.  The
    bounds are kept as exact rationals.
    """

    s: int
    lower: Fraction
    upper: Fraction

    def contains(self, mu: int | Fraction) -> bool:
        return self.lower <= mu <= self.upper


def validate_labeling(g: Digraph, l: TotalLabeling):
    """Raise BijectionError unless l is a total labeling of g."""
    if len(l.vertex_labels) != g.vertex_count:
        raise BijectionError(
            f"expected {g.vertex_count} vertex labels, got {len(l.vertex_labels)}")
    if len(l.arc_labels) != g.arc_count:
        raise BijectionError(
            f"expected {g.arc_count} arc labels, got {len(l.arc_labels)}")
    n = g.label_count
    if sorted(l.vertex_labels + l.arc_labels) != list(range(1, n + 1)):
        raise BijectionError(f"labels not a bijection onto 1..{n}")


def arc_weight(g: Digraph, l: TotalLabeling, index: int) -> int:
    """Subtractive weight of one arc: label(arc) + label(head) - label(tail)."""
    validate_labeling(g, l)
    if not 0 <= index < g.arc_count:
        raise IndexError(f"arc index {index} out of range for {g.arc_count} arcs")
    t, h = g.arcs[index]
    return l.arc_labels[index] + l.vertex_labels[h] - l.vertex_labels[t]


def vertex_weight(g: Digraph, l: TotalLabeling, vertex: int) -> int:
    """Subtractive weight of one vertex: own label + incoming - outgoing arc labels."""
    validate_labeling(g, l)
    if not 0 <= vertex < g.vertex_count:
        raise IndexError(f"vertex index {vertex} out of range for {g.vertex_count} vertices")
    w = l.vertex_labels[vertex]
    for i, (t, h) in enumerate(g.arcs):
        if h == vertex:
            w += l.arc_labels[i]
        if t == vertex:
            w -= l.arc_labels[i]
    return w


def weight_profile(g: Digraph, l: TotalLabeling) -> WeightProfile:
    """All arc and vertex weights, in storage order."""
    validate_labeling(g, l)
    vl, al = l.vertex_labels, l.arc_labels
    aw = []
    vw = list(vl)
    for i, (t, h) in enumerate(g.arcs):
        aw.append(al[i] + vl[h] - vl[t])
        vw[h] += al[i]
        vw[t] -= al[i]
    return WeightProfile(tuple(aw), tuple(vw))


def verdict_of(weights: Sequence[int]) -> Verdict:
    """Classify one weight vector; see the module docstring for the cases."""
    k = len(weights)
    if k == 0:
        return Verdict.magic(None)
    first = weights[0]
    if all(w == first for w in weights):
        return Verdict.magic(first)
    if len(set(weights)) < k:
        return Verdict.none()
    ws = sorted(weights)
    d = ws[1] - ws[0]
    if all(ws[i + 1] - ws[i] == d for i in range(k - 1)):
        return Verdict.arithmetic(ws[0], d)
    return Verdict.antimagic()


def classify(g: Digraph, l: TotalLabeling) -> Classification:
    """Full classification of a labeling: per-side verdicts plus the
    strong (vertex labels = {1..|V|}) and strong* (arc labels = {1..|A|}) flags."""
    profile = weight_profile(g, l)
    return Classification(
        arc_verdict=verdict_of(profile.arc_weights),
        vertex_verdict=verdict_of(profile.vertex_weights),
        strong=sorted(l.vertex_labels) == list(range(1, g.vertex_count + 1)),
        strong_star=sorted(l.arc_labels) == list(range(1, g.arc_count + 1)),
    )


def dual(g: Digraph, l: TotalLabeling) -> TotalLabeling:
    """Replace every label x by N+1-x.  An involution; it maps an arc-magic
    labeling with constant mu to one with constant N+1-mu."""
    validate_labeling(g, l)
    n1 = g.label_count + 1
    return TotalLabeling(tuple(n1 - x for x in l.vertex_labels),
                         tuple(n1 - x for x in l.arc_labels))


def longest_circuit(g: Digraph) -> int:
    """Length (arc count) of the longest directed circuit; 0 if acyclic.

    Exhaustive path search, exponential in the worst case; meant for the
    same desk-scale graphs the rest of the toolkit handles.
    """
    out = [[] for _ in range(g.vertex_count)]
    for t, h in g.arcs:
        out[t].append(h)
    best = 0

    def extend(start: int, v: int, used_arcs: int, on_path: set):
        nonlocal best
        for w in out[v]:
            if w == start:
                if used_arcs + 1 > best:
                    best = used_arcs + 1
            elif w > start and w not in on_path:
                on_path.add(w)
                extend(start, w, used_arcs + 1, on_path)
                on_path.discard(w)

    for s in range(g.vertex_count):
        extend(s, s, 0, {s})
    return best


def mu_bounds(g: Digraph) -> MuBound:
    """Exact bounds any arc-magic constant of g must satisfy."""
    s = longest_circuit(g)
    n = g.label_count
    return MuBound(s, Fraction(s + 1, 2), Fraction(2 * n - s + 1, 2))
