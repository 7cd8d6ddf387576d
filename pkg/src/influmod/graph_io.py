"""Input networks: the Graph container plus edge-list and GML readers."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, Optional, Sequence

import numpy as np


class ParseError(ValueError):
    """Malformed input text. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GraphValidationError(ValueError):
    """Input parsed but does not describe a valid simple graph."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Dense 0/1 adjacency with node labels and optional class labels.

    ``adjacency[i, j] == 1`` iff there is an edge i -> j. The array is made
    read-only on construction.
    """

    adjacency: np.ndarray
    directed: bool = False
    node_labels: Sequence[str] = field(default_factory=tuple)
    ground_truth: Optional[Sequence[Hashable]] = None

    def __post_init__(self):
        a = np.array(self.adjacency, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphValidationError(f"adjacency must be square, got {a.shape}")
        n = a.shape[0]
        if not np.all((a == 0) | (a == 1)):
            raise GraphValidationError("adjacency entries must be 0 or 1")
        if np.any(np.diag(a) != 0):
            raise GraphValidationError("self-loops are not allowed")
        if not self.directed and not np.array_equal(a, a.T):
            raise GraphValidationError("undirected graph needs a symmetric adjacency")
        labels = tuple(str(x) for x in self.node_labels) or tuple(str(i) for i in range(n))
        if len(labels) != n:
            raise GraphValidationError(f"{len(labels)} node labels for {n} nodes")
        truth = self.ground_truth
        if truth is not None:
            truth = tuple(truth)
            if len(truth) != n:
                raise GraphValidationError(f"{len(truth)} ground-truth labels for {n} nodes")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)
        object.__setattr__(self, "node_labels", labels)
        object.__setattr__(self, "ground_truth", truth)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        nnz = int(np.count_nonzero(self.adjacency))
        return nnz if self.directed else nnz // 2

    def index_of(self, label: str) -> int:
        return self.node_labels.index(str(label))

    def with_ground_truth(self, truth) -> "Graph":
        """Copy of this graph with class labels attached.

        ``truth`` is either a sequence aligned with the nodes or a mapping
        from node label to class.
        """
        if hasattr(truth, "keys"):
            missing = [lab for lab in self.node_labels if lab not in truth]
            if missing:
                raise GraphValidationError(f"no class for nodes {missing[:5]}")
            truth = [truth[lab] for lab in self.node_labels]
        return Graph(self.adjacency, self.directed, self.node_labels, truth)


def degrees(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Out- and in-degree vectors (row and column sums of the adjacency)."""
    return g.adjacency.sum(axis=1), g.adjacency.sum(axis=0)


# -- edge lists -------------------------------------------------------------

def parse_edge_list(text: str, directed: bool = False) -> Graph:
    """Parse ``<src> <dst>`` lines; ``#`` lines and blank lines are skipped.

    Nodes are numbered in order of first appearance. Duplicate edges
    collapse; self-loops are rejected.
    """
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected '<src> <dst>', got {raw!r}", lineno)
        src, dst = tokens
        if src == dst:
            raise GraphValidationError(f"line {lineno}: self-loop on node {src!r}")
        for tok in (src, dst):
            if tok not in index:
                index[tok] = len(index)
        edges.append((index[src], index[dst]))
    if not index:
        raise ParseError("empty graph: no edges found")

    a = np.zeros((len(index), len(index)))
    for i, j in edges:
        a[i, j] = 1.0
        if not directed:
            a[j, i] = 1.0
    return Graph(a, directed, list(index))


def to_edge_list(g: Graph) -> str:
    """Serialize ``g`` to edge-list text (isolated nodes are not representable)."""
    rows, cols = np.nonzero(g.adjacency)
    lab = g.node_labels
    lines = [
        f"{lab[i]} {lab[j]}"
        for i, j in zip(rows, cols)
        if g.directed or i < j
    ]
    return "\n".join(lines) + "\n"


# -- GML --------------------------------------------------------------------

_GML_TOKEN = re.compile(
    r"""\s*(?:
        (?P<open>\[) | (?P<close>\]) |
        "(?P<string>[^"]*)" |
        (?P<number>[-+]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?) |
        (?P<key>[A-Za-z_][A-Za-z0-9_]*)
    )""",
    re.VERBOSE,
)


def _gml_tokens(text: str):
    pos = 0
    line = 1
    end = len(text)
    while pos < end:
        # comments run to end of line
        if text[pos] == "#":
            nl = text.find("\n", pos)
            pos = end if nl < 0 else nl
            continue
        if text[pos].isspace():
            line += text[pos] == "\n"
            pos += 1
            continue
        m = _GML_TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "number":
            value = float(value) if re.search(r"[.eE]", value) else int(value)
        yield kind, value, line
        line += m.group(0).count("\n")
        pos = m.end()


def _gml_list(tokens, closing: bool) -> list[tuple[str, object, int]]:
    items = []
    for kind, value, line in tokens:
        if kind == "close":
            if not closing:
                raise ParseError("unbalanced ']'", line)
            return items
        if kind != "key":
            raise ParseError(f"expected a key, got {value!r}", line)
        try:
            vkind, vvalue, vline = next(tokens)
        except StopIteration:
            raise ParseError(f"key {value!r} has no value", line) from None
        if vkind == "open":
            items.append((value, _gml_list(tokens, closing=True), line))
        elif vkind in ("string", "number"):
            items.append((value, vvalue, line))
        else:
            raise ParseError(f"bad value for key {value!r}", vline)
    if closing:
        raise ParseError("unterminated '['")
    return items


def _first(items, key):
    for k, v, line in items:
        if k == key:
            return v, line
    return None, None


def parse_gml(text: str) -> Graph:
    """Parse the GML subset used by the public football and polbooks files.

    Nodes are indexed by sorted ``id``; ``label`` becomes the node label and
    ``value`` the ground-truth class. Unknown keys are ignored.
    """
    top = _gml_list(_gml_tokens(text), closing=False)
    graph, line = _first(top, "graph")
    if not isinstance(graph, list):
        raise ParseError("no 'graph [ ... ]' block found", line)

    directed_flag, _ = _first(graph, "directed")
    directed = bool(directed_flag)

    nodes = {}
    for key, body, line in graph:
        if key != "node":
            continue
        if not isinstance(body, list):
            raise ParseError("node must be a [ ... ] block", line)
        nid, _ = _first(body, "id")
        if not isinstance(nid, int):
            raise ParseError("node without integer id", line)
        if nid in nodes:
            raise GraphValidationError(f"duplicate node id {nid}")
        label, _ = _first(body, "label")
        value, _ = _first(body, "value")
        nodes[nid] = (str(nid) if label is None else str(label), value)
    if not nodes:
        raise ParseError("empty graph: no nodes found")

    ids = sorted(nodes)
    index = {nid: i for i, nid in enumerate(ids)}
    a = np.zeros((len(ids), len(ids)))
    for key, body, line in graph:
        if key != "edge":
            continue
        if not isinstance(body, list):
            raise ParseError("edge must be a [ ... ] block", line)
        src, _ = _first(body, "source")
        dst, _ = _first(body, "target")
        if src is None or dst is None:
            raise ParseError("edge missing source or target", line)
        if src not in index or dst not in index:
            raise GraphValidationError(f"edge {src} -> {dst} references an unknown node id")
        if src == dst:
            raise GraphValidationError(f"self-loop on node id {src}")
        i, j = index[src], index[dst]
        a[i, j] = 1.0
        if not directed:
            a[j, i] = 1.0

    values = [nodes[nid][1] for nid in ids]
    truth = values if all(v is not None for v in values) else None
    return Graph(a, directed, [nodes[nid][0] for nid in ids], truth)


# -- files ------------------------------------------------------------------

def parse_labels(text: str) -> dict[str, str]:
    """Parse ``<node> <class>`` lines into a mapping (``#`` comments skipped)."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected '<node> <class>', got {raw!r}", lineno)
        out[tokens[0]] = tokens[1]
    return out


def read_graph(path, fmt: Optional[str] = None, directed: bool = False) -> Graph:
    """Read a graph file; ``fmt`` is ``"gml"`` or ``"edgelist"`` (guessed from suffix)."""
    path = Path(path)
    if fmt is None:
        fmt = "gml" if path.suffix.lower() == ".gml" else "edgelist"
    text = path.read_text(encoding="utf-8")
    if fmt == "gml":
        return parse_gml(text)
    if fmt == "edgelist":
        return parse_edge_list(text, directed=directed)
    raise ValueError(f"unknown format {fmt!r}")
