"""Network documents: label-level descriptions and their two file formats.

Computation uses dense integer node ids; this module owns the boundary
where external labels are attached.  Two formats are supported: a JSON
object ``{"nodes": [...], "edges": [["A", "B"], ...]}`` and a plain
edge-list text format with one ``pred succ`` pair per line, ``node X``
lines for isolated nodes and ``#`` comments.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .networks import HierNet


@dataclass(frozen=True, slots=True)
class NetworkDocument:
    """Validated labelled network: unique labels, no self-loops, no duplicate edges."""

    labels: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise InputError("document declares no nodes")
        seen: set[str] = set()
        for label in self.labels:
            if label in seen:
                raise InputError(f"duplicate node label {label!r}")
            seen.add(label)
        pairs: set[tuple[str, str]] = set()
        for pred, succ in self.edges:
            if pred == succ:
                raise InputError(f"self-loop on node {pred!r} is not allowed")
            for label in (pred, succ):
                if label not in seen:
                    raise InputError(f"edge mentions undeclared node {label!r}")
            if (pred, succ) in pairs:
                raise InputError(f"duplicate edge {pred!r} -> {succ!r}")
            pairs.add((pred, succ))

    def to_network(self) -> HierNet:
        index = {label: i for i, label in enumerate(self.labels)}
        succ: list[set[int]] = [set() for _ in self.labels]
        for pred, head in self.edges:
            succ[index[pred]].add(index[head])
        return HierNet(len(self.labels), succ)

    @classmethod
    def from_network(cls, net: HierNet, labels: tuple[str, ...] | None = None) -> NetworkDocument:
        if labels is None:
            labels = tuple(str(i) for i in range(net.n))
        if len(labels) != net.n:
            raise InputError(f"{len(labels)} labels for {net.n} nodes")
        edges = tuple((labels[i], labels[j]) for i, j in net.edges())
        return cls(labels=labels, edges=edges)


# --- JSON format ----------------------------------------------------------------

def document_from_json(text: str) -> NetworkDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise InputError("top-level JSON value must be an object")
    nodes = payload.get("nodes")
    if not isinstance(nodes, list):
        raise InputError("missing or non-list field", location="nodes")
    labels = []
    for i, label in enumerate(nodes):
        if not isinstance(label, str):
            raise InputError("node labels must be strings", location=f"nodes[{i}]")
        labels.append(label)
    raw_edges = payload.get("edges", [])
    if not isinstance(raw_edges, list):
        raise InputError("must be a list of [pred, succ] pairs", location="edges")
    edges = []
    for i, pair in enumerate(raw_edges):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, str) for x in pair)
        ):
            raise InputError("each edge must be a [pred, succ] pair of strings",
                             location=f"edges[{i}]")
        edges.append((pair[0], pair[1]))
    return NetworkDocument(labels=tuple(labels), edges=tuple(edges))


def document_to_json(doc: NetworkDocument) -> str:
    payload = {"nodes": list(doc.labels), "edges": [list(e) for e in doc.edges]}
    return json.dumps(payload, indent=2) + "\n"


# --- edge-list format -----------------------------------------------------------

def document_from_edge_list(text: str) -> NetworkDocument:
    """Parse the line format; node labels are taken in order of first mention."""
    labels: list[str] = []
    known: set[str] = set()
    edges: list[tuple[str, str]] = []

    def declare(label: str) -> None:
        if label not in known:
            known.add(label)
            labels.append(label)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        where = f"line {lineno}"
        if fields[0] == "node":
            if len(fields) != 2:
                raise InputError("expected: node <label>", location=where)
            if fields[1] in known:
                raise InputError(f"duplicate node label {fields[1]!r}", location=where)
            declare(fields[1])
        elif len(fields) == 2:
            pred, succ = fields
            if pred == succ:
                raise InputError(f"self-loop on node {pred!r} is not allowed", location=where)
            declare(pred)
            declare(succ)
            if (pred, succ) in edges:
                raise InputError(f"duplicate edge {pred!r} -> {succ!r}", location=where)
            edges.append((pred, succ))
        else:
            raise InputError("expected: <pred> <succ> or node <label>", location=where)
    if not labels:
        raise InputError("document declares no nodes")
    return NetworkDocument(labels=tuple(labels), edges=tuple(edges))


def document_to_edge_list(doc: NetworkDocument) -> str:
    lines = [f"node {label}" for label in doc.labels]
    lines.extend(f"{pred} {succ}" for pred, succ in doc.edges)
    return "\n".join(lines) + "\n"


def load_document(path: str | Path) -> NetworkDocument:
    """Read a document from disk, sniffing JSON (leading ``{``) vs edge list."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    if text.lstrip().startswith("{"):
        return document_from_json(text)
    return document_from_edge_list(text)
