"""Line-oriented poset and bipartite-graph files plus DOT export.

Poset files:

    poset v1 n=<count>
    elem <index> <label>
    cover <a> <b>
    weight <index> <w>
    note <free text>

elem lines cover indices 0..n-1 exactly once; labels are single tokens and
unique.  weight lines are optional (missing indices default to 1; a document
with no weight lines at all has weights None).  note lines are free-form and
preserved verbatim.  emit() is canonical, so parse(emit(doc)) == doc and the
second emit is byte-identical.

Graph files:

    graph v1 a=<left> b=<right>
    edge <i> <j>
"""

import dataclasses
import re

from .errors import CycleDetected, MalformedDocument
from .gadget import BipartiteGraph
from .linext import DEFAULT_CAP, le_graph
from .poset import Poset, WeightedPoset, from_cover_relations

_POSET_HEADER = re.compile(r"^poset v1 n=(\d+)$")
_GRAPH_HEADER = re.compile(r"^graph v1 a=(\d+) b=(\d+)$")


@dataclasses.dataclass(frozen=True)
class PosetDocument:
    poset: Poset
    weights: tuple = None
    notes: tuple = ()

    def weighted(self):
        w = self.weights if self.weights is not None else (1,) * self.poset.n
        return WeightedPoset(self.poset, tuple(w))


def document(p, weights=None, notes=()):
    if weights is not None:
        weights = tuple(int(w) for w in weights)
        if len(weights) != p.n:
            raise ValueError("need one weight per element")
    return PosetDocument(p, weights, tuple(str(s) for s in notes))


def emit(doc):
    p = doc.poset
    lines = [f"poset v1 n={p.n}"]
    for i, label in enumerate(p.labels):
        lines.append(f"elem {i} {label}")
    for a, b in p.cover_pairs():
        lines.append(f"cover {a} {b}")
    if doc.weights is not None:
        for i, w in enumerate(doc.weights):
            lines.append(f"weight {i} {w}")
    for note in doc.notes:
        lines.append(f"note {note}" if note else "note")
    return "\n".join(lines) + "\n"


def _int_field(token, line):
    if not re.fullmatch(r"-?\d+", token):
        raise MalformedDocument(f"expected an integer in {line!r}")
    return int(token)


def parse(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedDocument("empty document")
    m = _POSET_HEADER.match(lines[0])
    if not m:
        raise MalformedDocument(f"bad header {lines[0]!r}")
    n = int(m.group(1))
    labels = {}
    covers = []
    weights = {}
    notes = []
    for line in lines[1:]:
        parts = line.split()
        kind = parts[0]
        if kind == "elem":
            if len(parts) != 3:
                raise MalformedDocument(f"bad elem line {line!r}")
            i = _int_field(parts[1], line)
            if not 0 <= i < n:
                raise MalformedDocument(f"element index {i} out of range")
            if i in labels:
                raise MalformedDocument(f"duplicate element index {i}")
            labels[i] = parts[2]
        elif kind == "cover":
            if len(parts) != 3:
                raise MalformedDocument(f"bad cover line {line!r}")
            covers.append((_int_field(parts[1], line), _int_field(parts[2], line)))
        elif kind == "weight":
            if len(parts) != 3:
                raise MalformedDocument(f"bad weight line {line!r}")
            i = _int_field(parts[1], line)
            w = _int_field(parts[2], line)
            if not 0 <= i < n:
                raise MalformedDocument(f"weight index {i} out of range")
            if i in weights:
                raise MalformedDocument(f"duplicate weight for element {i}")
            if w < 1:
                raise MalformedDocument(f"weight {w} must be positive")
            weights[i] = w
        elif kind == "note":
            notes.append(line[len("note ") :] if len(line) > 4 else "")
        else:
            raise MalformedDocument(f"unknown directive {kind!r}")
    if len(labels) != n:
        raise MalformedDocument(f"expected {n} elem lines, got {len(labels)}")
    label_seq = tuple(labels[i] for i in range(n))
    if len(set(label_seq)) != n:
        raise MalformedDocument("labels must be unique")
    try:
        p = from_cover_relations(n, covers, label_seq)
    except CycleDetected as exc:
        raise MalformedDocument("cover relations contain a cycle") from exc
    except ValueError as exc:
        raise MalformedDocument(str(exc)) from exc
    w = None
    if weights:
        w = tuple(weights.get(i, 1) for i in range(n))
    return PosetDocument(p, w, tuple(notes))


def read_document(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write_document(path, doc):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit(doc))


def emit_graph(g):
    lines = [f"graph v1 a={g.a} b={g.b}"]
    for i, j in sorted(g.edges):
        lines.append(f"edge {i} {j}")
    return "\n".join(lines) + "\n"


def parse_graph(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedDocument("empty graph file")
    m = _GRAPH_HEADER.match(lines[0])
    if not m:
        raise MalformedDocument(f"bad graph header {lines[0]!r}")
    a, b = int(m.group(1)), int(m.group(2))
    edges = set()
    for line in lines[1:]:
        parts = line.split()
        if parts[0] != "edge" or len(parts) != 3:
            raise MalformedDocument(f"bad edge line {line!r}")
        i = _int_field(parts[1], line)
        j = _int_field(parts[2], line)
        if not (0 <= i < a and 0 <= j < b):
            raise MalformedDocument(f"edge ({i},{j}) out of range")
        edges.add((i, j))
    try:
        return BipartiteGraph(a, b, frozenset(edges))
    except ValueError as exc:
        raise MalformedDocument(str(exc)) from exc


def read_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def le_word(labels, le):
    """Extension as a word, bottom to top; commas once labels grow."""
    parts = [labels[x] for x in le]
    if all(len(s) == 1 for s in parts):
        return "".join(parts)
    return ",".join(parts)


def legraph_dot(p, cap=DEFAULT_CAP, name="legraph"):
    g = le_graph(p, cap)
    words = [le_word(p.labels, le) for le in g.vertices]
    out = [f"graph {name} {{", "  node [shape=box];"]
    for w in words:
        out.append(f'  "{w}";')
    for i, j, (x, y) in g.edges:
        swap = f"{p.labels[x]},{p.labels[y]}"
        out.append(f'  "{words[i]}" -- "{words[j]}" [swap="{swap}"];')
    out.append("}")
    return "\n".join(out) + "\n"
