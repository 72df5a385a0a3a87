"""Exhaustive search for total labelings in a target weight class.

Labels 1..N are assigned to a fixed slot sequence: vertices in index
order, then arcs in index order.  Witnesses are reported in lexicographic
order over that slot sequence, which makes every result reproducible.

Two enumerators share the skeleton:

* the pruned kernel cuts branches using the label-sum identities (the sum
  of the vertex weights always equals the sum of the vertex labels, and
  on graphs with in-degree == out-degree everywhere the sum of the arc
  weights equals the sum of the arc labels), forces arc labels once a
  magic constant is pinned down, rejects duplicate weights among fully
  determined weights for distinctness targets, and cuts partial vertex
  weights that cannot reach the magic constant any more;
* the reference enumerator visits every partial assignment and filters
  complete labelings through the classifier.

Pruning never changes the solution set, only the number of visited
nodes; the test suite checks both enumerators against each other.

The search space is N!, so the entry point refuses graphs beyond a cap
(default 12) unless the caller overrides it.  Searches at N = 13 are
minutes-scale, single-threaded, in the worst case.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .digraph import Digraph
from .labeling import TotalLabeling, Verdict, classify, verdict_of

DEFAULT_CAP = 12
ENV_CAP_VAR = "SUBLABEL_SEARCH_CAP"

TARGET_SIDES = ("arc", "vertex")
TARGET_KINDS = ("magic", "antimagic", "arithmetic")


class SearchCapError(ValueError):
    """The graph is too large for exhaustive search under the current cap."""


@dataclass(frozen=True)
class Target:
    """Weight class to search for on one side of the labeling.

    * magic      -- all weights equal
    * antimagic  -- all weights pairwise distinct (arithmetic ones included)
    * arithmetic -- sorted weights form a progression with difference >= 1;
                    `a` and/or `d` pin the progression down when given
    """

    side: str
    kind: str
    a: int | None = None
    d: int | None = None

    def __post_init__(self):
        if self.side not in TARGET_SIDES:
            raise ValueError(f"target side must be one of {TARGET_SIDES}, got {self.side!r}")
        if self.kind not in TARGET_KINDS:
            raise ValueError(f"target kind must be one of {TARGET_KINDS}, got {self.kind!r}")

    def matches(self, verdict: Verdict) -> bool:
        if self.kind == "magic":
            return verdict.kind == "magic"
        if self.kind == "antimagic":
            return verdict.kind in ("antimagic", "arithmetic")
        if verdict.kind != "arithmetic":
            return False
        return (self.a is None or verdict.a == self.a) and \
               (self.d is None or verdict.d == self.d)


@dataclass(frozen=True)
class SearchQuery:
    graph: Digraph
    target: Target
    require_strong: bool = False
    require_strong_star: bool = False
    mode: str = "count-all"  # or "first-witness" / "collect-up-to"
    limit: int | None = None

    def __post_init__(self):
        if self.mode not in ("count-all", "first-witness", "collect-up-to"):
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.mode == "collect-up-to" and (self.limit is None or self.limit < 1):
            raise ValueError("collect-up-to mode needs a positive limit")

    @property
    def witness_cap(self) -> int:
        """How many witnesses this mode records (0 = count only)."""
        if self.mode == "count-all":
            return 0
        if self.mode == "first-witness":
            return 1
        return self.limit


@dataclass
class SearchReport:
    """Certificate of a search run.

    `exhaustive` is true iff the whole space was covered; count-all runs
    are always exhaustive, witness-bounded runs stop early once the bound
    is reached.  With more than one worker the top-level branches are
    searched independently, so in early-stopping modes nodes_visited may
    differ from the single-worker run; counts and witness lists never do.
    """

    query: SearchQuery
    exhaustive: bool
    solutions_found: int
    witnesses: list[TotalLabeling]
    nodes_visited: int
    elapsed: float

    def to_dict(self) -> dict:
        g = self.query.graph
        family = None
        if g.family is not None:
            family = {"name": g.family.name, "n": g.family.n}
            if g.family.t is not None:
                family["t"] = g.family.t
            if g.family.orientation is not None:
                family["orientation"] = g.family.orientation
        t = self.query.target
        target = {"side": t.side, "kind": t.kind}
        if t.a is not None:
            target["a"] = t.a
        if t.d is not None:
            target["d"] = t.d
        return {
            "query": {
                "graph": {
                    "vertex_count": g.vertex_count,
                    "arcs": [list(a) for a in g.arcs],
                    "family": family,
                },
                "target": target,
                "require_strong": self.query.require_strong,
                "require_strong_star": self.query.require_strong_star,
                "mode": self.query.mode,
                "limit": self.query.limit,
            },
            "exhaustive": self.exhaustive,
            "solutions_found": self.solutions_found,
            "witnesses": [
                {"vertex_labels": list(w.vertex_labels), "arc_labels": list(w.arc_labels)}
                for w in self.witnesses
            ],
            "nodes_visited": self.nodes_visited,
            "elapsed": self.elapsed,
        }


class _Kernel:
    """One enumerator instance; run() explores (a branch of) the tree."""

    def __init__(self, query: SearchQuery, pruned: bool):
        g = query.graph
        self.g = g
        self.query = query
        self.target = query.target
        self.pruned = pruned
        self.V = g.vertex_count
        self.A = g.arc_count
        self.N = g.label_count
        self.tails = [t for t, _ in g.arcs]
        self.heads = [h for _, h in g.arcs]
        self.in_arcs = [[] for _ in range(self.V)]
        self.out_arcs = [[] for _ in range(self.V)]
        for i, (t, h) in enumerate(g.arcs):
            self.out_arcs[t].append(i)
            self.in_arcs[h].append(i)
        self.eulerian = all(len(self.in_arcs[v]) == len(self.out_arcs[v])
                            for v in range(self.V))
        self.total = self.N * (self.N + 1) // 2
        # label domains; the reference enumerator checks the strong flags
        # at the leaves instead, so it keeps full domains
        v_lo, v_hi, a_lo, a_hi = 1, self.N, 1, self.N
        if pruned and query.require_strong:
            v_hi = min(v_hi, self.V)
            a_lo = max(a_lo, self.V + 1)
        if pruned and query.require_strong_star:
            a_hi = min(a_hi, self.A)
            v_lo = max(v_lo, self.A + 1)
        self.v_lo, self.v_hi = v_lo, v_hi
        self.a_lo, self.a_hi = a_lo, a_hi
        # exact allowed weight set when an arithmetic target is fully pinned
        t = query.target
        side_count = self.A if t.side == "arc" else self.V
        self.allowed = None
        if pruned and t.kind == "arithmetic" and t.a is not None and t.d is not None:
            self.allowed = {t.a + j * t.d for j in range(side_count)}

    def first_labels(self) -> list[int]:
        """Slot-0 label choices, in canonical order (for branch splitting)."""
        if self.N == 0:
            return []
        lo, hi = (self.v_lo, self.v_hi) if self.V else (self.a_lo, self.a_hi)
        return list(range(lo, hi + 1))

    def run(self, first_label: int | None = None):
        """Explore the tree (or the branch under first_label).

        Returns (count, witnesses, nodes, completed) where completed is
        False iff the run stopped early at its witness bound.
        """
        self.count = 0
        self.nodes = 0
        self.wits: list[TotalLabeling] = []
        self.stopped = False
        self.cap = self.query.witness_cap
        self.used = [False] * (self.N + 2)
        self.vl = [0] * self.V
        self.al = [0] * self.A
        if self.N == 0:
            self._leaf()
        elif first_label is None:
            self._vertex_slot(0)
        else:
            lo, hi = (self.v_lo, self.v_hi) if self.V else (self.a_lo, self.a_hi)
            if lo <= first_label <= hi:
                self.used[first_label] = True
                self.vl[0] = first_label
                self.nodes += 1
                self._vertex_slot(1)
                self.used[first_label] = False
        return self.count, self.wits, self.nodes, not self.stopped

    # -- vertex phase -------------------------------------------------

    def _vertex_slot(self, s: int):
        if s == self.V:
            self._boundary()
            return
        vl, used = self.vl, self.used
        for lab in range(self.v_lo, self.v_hi + 1):
            if used[lab]:
                continue
            used[lab] = True
            vl[s] = lab
            self.nodes += 1
            self._vertex_slot(s + 1)
            used[lab] = False
            if self.stopped:
                return

    def _boundary(self):
        """All vertex labels placed; set up the arc phase."""
        if not self.pruned:
            self._arc_slot_plain(0)
            return
        t = self.target
        if t.side == "arc":
            if t.kind == "magic":
                self.mu = None
                if self.eulerian and self.A:
                    arc_sum = self.total - sum(self.vl)
                    if arc_sum % self.A:
                        return
                    self.mu = arc_sum // self.A
                self._arc_slot_arc_magic(0)
            else:
                self.seen = set()
                self._arc_slot_arc_distinct(0)
            return
        # vertex-side targets track partial vertex weights through the arc phase
        self.pw = list(self.vl)
        self.rem_in = [len(self.in_arcs[v]) for v in range(self.V)]
        self.rem_out = [len(self.out_arcs[v]) for v in range(self.V)]
        if t.kind == "magic":
            vertex_sum = sum(self.vl)
            if self.V and vertex_sum % self.V:
                return
            self.mu = vertex_sum // self.V if self.V else None
            for v in range(self.V):
                if self.rem_in[v] == 0 == self.rem_out[v] and self.pw[v] != self.mu:
                    return
            self._arc_slot_vertex_magic(0)
        else:
            self.seen = set()
            for v in range(self.V):
                if self.rem_in[v] == 0 == self.rem_out[v]:
                    w = self.pw[v]
                    if not self._weight_ok(w):
                        return
                    self.seen.add(w)
            self._arc_slot_vertex_distinct(0)

    def _weight_ok(self, w: int) -> bool:
        """Is this fully determined weight still compatible with the target?"""
        if w in self.seen:
            return False
        t = self.target
        if t.kind == "arithmetic":
            if self.allowed is not None:
                return w in self.allowed
            if t.a is not None and w < t.a:
                return False
        return True

    # -- arc phase, reference ------------------------------------------

    def _arc_slot_plain(self, k: int):
        if k == self.A:
            self._leaf()
            return
        al, used = self.al, self.used
        for lab in range(1, self.N + 1):
            if used[lab]:
                continue
            used[lab] = True
            al[k] = lab
            self.nodes += 1
            self._arc_slot_plain(k + 1)
            used[lab] = False
            if self.stopped:
                return

    # -- arc phase, arc-side targets ------------------------------------

    def _arc_slot_arc_magic(self, k: int):
        if k == self.A:
            self._leaf()
            return
        base = self.vl[self.heads[k]] - self.vl[self.tails[k]]
        al, used = self.al, self.used
        if self.mu is not None:
            lab = self.mu - base  # the only label giving this arc weight mu
            if self.a_lo <= lab <= self.a_hi and not used[lab]:
                used[lab] = True
                al[k] = lab
                self.nodes += 1
                self._arc_slot_arc_magic(k + 1)
                used[lab] = False
            return
        for lab in range(self.a_lo, self.a_hi + 1):
            if used[lab]:
                continue
            used[lab] = True
            al[k] = lab
            self.nodes += 1
            self.mu = lab + base
            self._arc_slot_arc_magic(k + 1)
            self.mu = None
            used[lab] = False
            if self.stopped:
                return

    def _arc_slot_arc_distinct(self, k: int):
        if k == self.A:
            self._leaf()
            return
        base = self.vl[self.heads[k]] - self.vl[self.tails[k]]
        al, used, seen = self.al, self.used, self.seen
        for lab in range(self.a_lo, self.a_hi + 1):
            if used[lab]:
                continue
            w = lab + base
            if not self._weight_ok(w):
                continue
            used[lab] = True
            al[k] = lab
            self.nodes += 1
            seen.add(w)
            self._arc_slot_arc_distinct(k + 1)
            seen.discard(w)
            used[lab] = False
            if self.stopped:
                return

    # -- arc phase, vertex-side targets ----------------------------------

    def _place_on_endpoints(self, k: int, lab: int):
        ti, hi = self.tails[k], self.heads[k]
        self.pw[ti] -= lab
        self.pw[hi] += lab
        self.rem_out[ti] -= 1
        self.rem_in[hi] -= 1

    def _unplace_on_endpoints(self, k: int, lab: int):
        ti, hi = self.tails[k], self.heads[k]
        self.pw[ti] += lab
        self.pw[hi] -= lab
        self.rem_out[ti] += 1
        self.rem_in[hi] += 1

    def _vertex_feasible(self, v: int) -> bool:
        """Can the pending arcs of v still bring its weight to mu?

        Remaining arc labels are at least 1 and at most N, so the
        reachable weights form the interval used here (a superset of the
        truly reachable ones; only used to cut, never to accept).
        """
        ri, ro = self.rem_in[v], self.rem_out[v]
        if ri == 0 == ro:
            return self.pw[v] == self.mu
        lo = self.pw[v] + ri - ro * self.N
        hi = self.pw[v] + ri * self.N - ro
        return lo <= self.mu <= hi

    def _arc_slot_vertex_magic(self, k: int):
        if k == self.A:
            self._leaf()
            return
        ti, hi_v = self.tails[k], self.heads[k]
        al, used = self.al, self.used
        # an arc that is the last open arc of an endpoint has a forced label
        forced = None
        if self.rem_in[ti] + self.rem_out[ti] == 1:
            forced = self.pw[ti] - self.mu
        if self.rem_in[hi_v] + self.rem_out[hi_v] == 1:
            other = self.mu - self.pw[hi_v]
            if forced is not None and forced != other:
                return
            forced = other
        if forced is not None:
            candidates = (forced,) if self.a_lo <= forced <= self.a_hi and not used[forced] else ()
        else:
            candidates = None
        labels = candidates if candidates is not None else range(self.a_lo, self.a_hi + 1)
        for lab in labels:
            if used[lab]:
                continue
            used[lab] = True
            al[k] = lab
            self.nodes += 1
            self._place_on_endpoints(k, lab)
            if self._vertex_feasible(ti) and self._vertex_feasible(hi_v):
                self._arc_slot_vertex_magic(k + 1)
            self._unplace_on_endpoints(k, lab)
            used[lab] = False
            if self.stopped:
                return

    def _arc_slot_vertex_distinct(self, k: int):
        if k == self.A:
            self._leaf()
            return
        ti, hi_v = self.tails[k], self.heads[k]
        al, used, seen = self.al, self.used, self.seen
        for lab in range(self.a_lo, self.a_hi + 1):
            if used[lab]:
                continue
            used[lab] = True
            al[k] = lab
            self.nodes += 1
            self._place_on_endpoints(k, lab)
            added = []
            ok = True
            for v in (ti, hi_v):
                if self.rem_in[v] == 0 == self.rem_out[v]:
                    w = self.pw[v]
                    if self._weight_ok(w):
                        seen.add(w)
                        added.append(w)
                    else:
                        ok = False
                        break
            if ok:
                self._arc_slot_vertex_distinct(k + 1)
            for w in added:
                seen.discard(w)
            self._unplace_on_endpoints(k, lab)
            used[lab] = False
            if self.stopped:
                return

    # -- leaves ----------------------------------------------------------

    def _leaf(self):
        if self.pruned:
            if self.target.side == "vertex":
                weights = self.pw if self.A else self.vl
            else:
                vl = self.vl
                weights = [self.al[i] + vl[self.heads[i]] - vl[self.tails[i]]
                           for i in range(self.A)]
            if not self.target.matches(verdict_of(weights)):
                return
        else:
            labeling = TotalLabeling(tuple(self.vl), tuple(self.al))
            cls = classify(self.g, labeling)
            verdict = cls.arc_verdict if self.target.side == "arc" else cls.vertex_verdict
            if not self.target.matches(verdict):
                return
            if self.query.require_strong and not cls.strong:
                return
            if self.query.require_strong_star and not cls.strong_star:
                return
        self.count += 1
        if self.cap:
            self.wits.append(TotalLabeling(tuple(self.vl), tuple(self.al)))
            if self.count >= self.cap:
                self.stopped = True


def _branch_task(payload):
    query, pruned, label = payload
    kernel = _Kernel(query, pruned)
    return kernel.run(first_label=label)


def search(query: SearchQuery, *, cap: int = DEFAULT_CAP, workers: int = 1,
           pruned: bool = True) -> SearchReport:
    """Exhaustively enumerate total labelings of query.graph in the target
    class.

    Refuses graphs with more than `cap` labels (default 12); pass a larger
    cap to override.  `workers` > 1 splits the top-level branches over a
    process pool; results are aggregated in canonical order, so counts and
    witness lists are identical to the single-worker run.  `pruned=False`
    selects the naive reference enumerator.
    """
    n = query.graph.label_count
    if n > cap:
        raise SearchCapError(
            f"graph has {n} labels, over the search cap of {cap}; "
            f"raise the cap to force the search")
    started = time.perf_counter()
    kernel = _Kernel(query, pruned)
    if workers <= 1 or n == 0:
        results = [kernel.run()]
    else:
        payloads = [(query, pruned, lab) for lab in kernel.first_labels()]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_branch_task, payloads))
    total = sum(r[0] for r in results)
    witnesses = [w for r in results for w in r[1]]
    nodes = sum(r[2] for r in results)
    completed = all(r[3] for r in results)
    wcap = query.witness_cap
    if wcap and total >= wcap:
        solutions = wcap
        witnesses = witnesses[:wcap]
        exhaustive = False
    else:
        solutions = total
        exhaustive = completed
    return SearchReport(
        query=query,
        exhaustive=exhaustive,
        solutions_found=solutions,
        witnesses=witnesses,
        nodes_visited=nodes,
        elapsed=time.perf_counter() - started,
    )


def verify_iff_cycles(n: int, *, cap: int = DEFAULT_CAP) -> bool:
    """Check on the dicycle with n vertices that arc-magic and vertex-magic
    labelings exist together or not at all (both counts via full search)."""
    from .digraph import build_family

    g = build_family("cycle", n)
    arc_report = search(SearchQuery(g, Target("arc", "magic")), cap=cap)
    vertex_report = search(SearchQuery(g, Target("vertex", "magic")), cap=cap)
    return (arc_report.solutions_found > 0) == (vertex_report.solutions_found > 0)
