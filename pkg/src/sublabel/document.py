"""JSON interchange for digraphs with optional labelings, plus DOT export.

One schema serves both labeled and graph-only payloads, so the same file
can feed the verifier (labels required) or the search runner (labels
ignored).  All numbers are plain integers; weights may be negative.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .digraph import Digraph, ParameterError, build_family
from .labeling import TotalLabeling, weight_profile

FORMAT_VERSION = 1


class DocumentError(ValueError):
    """The document is malformed or inconsistent."""


@dataclass(frozen=True)
class LabelingDocument:
    graph: Digraph
    labeling: TotalLabeling | None = None
    classification: dict | None = None
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        d: dict = {"format_version": FORMAT_VERSION}
        tag = self.graph.family
        if tag is not None:
            family: dict = {"name": tag.name, "n": tag.n}
            if tag.t is not None:
                family["t"] = tag.t
            if tag.orientation is not None:
                family["orientation"] = tag.orientation
            d["family"] = family
        d["vertex_count"] = self.graph.vertex_count
        d["arcs"] = [list(a) for a in self.graph.arcs]
        if self.labeling is not None:
            d["vertex_labels"] = list(self.labeling.vertex_labels)
            d["arc_labels"] = list(self.labeling.arc_labels)
        if self.classification is not None:
            d["classification"] = self.classification
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _expect_int_list(value, name: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise DocumentError(f"{name} must be a list of integers")
    return value


def from_dict(d: dict) -> LabelingDocument:
    if not isinstance(d, dict):
        raise DocumentError("document must be a JSON object")
    version = d.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {version!r}; expected {FORMAT_VERSION}")
    if "vertex_count" not in d or "arcs" not in d:
        raise DocumentError("document needs vertex_count and arcs")
    if not isinstance(d["vertex_count"], int):
        raise DocumentError("vertex_count must be an integer")
    arcs = d["arcs"]
    if not isinstance(arcs, list):
        raise DocumentError("arcs must be a list of [tail, head] pairs")
    parsed_arcs = []
    for a in arcs:
        if not (isinstance(a, list) and len(a) == 2 and all(isinstance(x, int) for x in a)):
            raise DocumentError(f"bad arc entry {a!r}; expected [tail, head]")
        parsed_arcs.append((a[0], a[1]))

    family = None
    fd = d.get("family")
    if fd is not None:
        if not isinstance(fd, dict) or "name" not in fd or "n" not in fd:
            raise DocumentError("family block needs at least name and n")
        try:
            rebuilt = build_family(fd["name"], fd["n"], t=fd.get("t"),
                                   orientation=fd.get("orientation"))
        except ParameterError as exc:
            raise DocumentError(f"bad family block: {exc}") from exc
        if rebuilt.vertex_count != d["vertex_count"] or list(rebuilt.arcs) != parsed_arcs:
            raise DocumentError("family block does not match the stored arcs")
        family = rebuilt.family

    try:
        graph = Digraph(d["vertex_count"], tuple(parsed_arcs), family)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc

    has_v = "vertex_labels" in d and d["vertex_labels"] is not None
    has_a = "arc_labels" in d and d["arc_labels"] is not None
    if has_v != has_a:
        raise DocumentError("vertex_labels and arc_labels must be given together")
    labeling = None
    if has_v:
        labeling = TotalLabeling(
            tuple(_expect_int_list(d["vertex_labels"], "vertex_labels")),
            tuple(_expect_int_list(d["arc_labels"], "arc_labels")))
        if len(labeling.vertex_labels) != graph.vertex_count:
            raise DocumentError("vertex_labels length does not match vertex_count")
        if len(labeling.arc_labels) != graph.arc_count:
            raise DocumentError("arc_labels length does not match the arc list")

    classification = d.get("classification")
    if classification is not None and not isinstance(classification, dict):
        raise DocumentError("classification must be an object")
    notes = d.get("notes", [])
    if not isinstance(notes, list) or not all(isinstance(x, str) for x in notes):
        raise DocumentError("notes must be a list of strings")
    return LabelingDocument(graph, labeling, classification, tuple(notes))


def from_json(text: str) -> LabelingDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    return from_dict(data)


def to_dot(doc: LabelingDocument) -> str:
    """Render the document as a DOT digraph.

    Every vertex becomes a node labeled "v<i>:<label>" and every arc an
    edge labeled "<label> (w=<weight>)"; without a labeling the plain
    structure is emitted.  The output is byte-deterministic.
    """
    g = doc.graph
    lines = ["digraph G {"]
    if doc.labeling is None:
        for i in range(g.vertex_count):
            lines.append(f'  v{i} [label="v{i}"];')
        for t, h in g.arcs:
            lines.append(f"  v{t} -> v{h};")
    else:
        profile = weight_profile(g, doc.labeling)
        for i in range(g.vertex_count):
            lines.append(f'  v{i} [label="v{i}:{doc.labeling.vertex_labels[i]}"];')
        for i, (t, h) in enumerate(g.arcs):
            lines.append(f'  v{t} -> v{h} [label="{doc.labeling.arc_labels[i]} '
                         f'(w={profile.arc_weights[i]})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
