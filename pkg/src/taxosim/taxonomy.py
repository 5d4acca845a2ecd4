"""Hierarchical thesaurus taxonomy: parsing, indexing, and structural queries.

The taxonomy is a strict rooted tree. Internal nodes are groupings (classes,
categories, word groups); leaves are word entries. Words additionally carry a
position in the flat lexicon order, which is simply the order their lines
appear in the source file.

File format (UTF-8, LF): each content line is ``<depth>\\t<kind>\\t<label>``
with ``kind`` one of ``node`` (internal) or ``word``. A line's parent is the
nearest preceding line whose depth is one less. Lines starting with ``#`` are
comments; blank lines are ignored. The first content line must be the root:
depth 0, kind ``node``. Labels may contain spaces (multi-word phrases) but not
tabs.

A parsed :class:`Taxonomy` is immutable; every query function here is pure and
safe for concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO

from .errors import ParseError

ConceptId = int

KIND_INTERNAL = "internal"
KIND_WORD = "word"

_FILE_KIND = {KIND_INTERNAL: "node", KIND_WORD: "word"}
_KIND_FROM_FILE = {"node": KIND_INTERNAL, "word": KIND_WORD}


@dataclass(frozen=True)
class Node:
    """One concept in the hierarchy.

    ``flat_pos`` is present exactly for word nodes: the 0-based position of
    the word in flat lexicon order.
    """

    id: ConceptId
    label: str
    kind: str
    parent: ConceptId | None
    depth: int
    children: tuple[ConceptId, ...]
    flat_pos: int | None = None

    @property
    def is_word(self) -> bool:
        return self.kind == KIND_WORD


@dataclass(frozen=True)
class Taxonomy:
    """Immutable indexed taxonomy.

    ``word_index`` maps case-folded surface words to their sense ids (word
    nodes) in flat order. Node ids are dense, contiguous from 0, and assigned
    in file order, so a node's id is always greater than its parent's.
    """

    nodes: tuple[Node, ...]
    word_index: dict[str, tuple[ConceptId, ...]]
    word_count: int

    def __len__(self) -> int:
        return len(self.nodes)

    def node(self, cid: ConceptId) -> Node:
        if not 0 <= cid < len(self.nodes):
            raise ValueError(f"invalid concept id: {cid}")
        return self.nodes[cid]

    @property
    def root(self) -> Node:
        return self.nodes[0]


def _as_lines(source: str | bytes | IO[str] | IO[bytes]) -> list[str]:
    """Normalize str/bytes/file-like input to a list of text lines."""
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return data.split("\n")


def parse_taxonomy(source: str | bytes | IO[str] | IO[bytes], name: str | None = None) -> Taxonomy:
    """Parse the tab-separated hierarchy format into an indexed Taxonomy.

    Raises :class:`ParseError` (with a line number) on malformed lines, depth
    jumps greater than +1, word lines given children, multiple roots, or empty
    input.
    """
    labels: list[str] = []
    kinds: list[str] = []
    parents: list[ConceptId | None] = []
    depths: list[int] = []
    children: list[list[ConceptId]] = []
    flat_positions: list[int | None] = []
    word_index: dict[str, list[ConceptId]] = {}

    path: list[ConceptId] = []  # path[d] = id of the current ancestor at depth d
    word_count = 0

    for lineno, raw in enumerate(_as_lines(source), start=1):
        if not raw.strip():
            continue
        if raw.startswith("#"):
            continue
        parts = raw.split("\t")
        if len(parts) != 3:
            raise ParseError(
                f"expected 3 tab-separated fields, found {len(parts)}", lineno, name
            )
        depth_text, kind_text, label = parts
        try:
            depth = int(depth_text, 10)
        except ValueError:
            raise ParseError(f"depth is not an integer: {depth_text!r}", lineno, name) from None
        if depth < 0:
            raise ParseError(f"negative depth: {depth}", lineno, name)
        kind = _KIND_FROM_FILE.get(kind_text)
        if kind is None:
            raise ParseError(f"unknown kind {kind_text!r} (expected 'node' or 'word')", lineno, name)
        if not label:
            raise ParseError("empty label", lineno, name)

        if not labels:
            if depth != 0:
                raise ParseError("first content line must have depth 0", lineno, name)
            if kind != KIND_INTERNAL:
                raise ParseError("first content line must be kind 'node' (the root)", lineno, name)
            parent: ConceptId | None = None
        else:
            if depth == 0:
                raise ParseError("multiple roots: a second depth-0 line", lineno, name)
            if depth > len(path):
                raise ParseError(
                    f"depth jump: depth {depth} after depth {len(path) - 1}", lineno, name
                )
            parent = path[depth - 1]
            if kinds[parent] == KIND_WORD:
                raise ParseError(
                    f"word entry {labels[parent]!r} cannot have children", lineno, name
                )

        cid = len(labels)
        labels.append(label)
        kinds.append(kind)
        parents.append(parent)
        depths.append(depth)
        children.append([])
        if parent is not None:
            children[parent].append(cid)
        if kind == KIND_WORD:
            flat_positions.append(word_count)
            word_count += 1
            word_index.setdefault(label.casefold(), []).append(cid)
        else:
            flat_positions.append(None)
        del path[depth:]
        path.append(cid)

    if not labels:
        raise ParseError("empty input: no content lines", None, name)

    nodes = tuple(
        Node(
            id=i,
            label=labels[i],
            kind=kinds[i],
            parent=parents[i],
            depth=depths[i],
            children=tuple(children[i]),
            flat_pos=flat_positions[i],
        )
        for i in range(len(labels))
    )
    frozen_index = {word: tuple(ids) for word, ids in word_index.items()}
    return Taxonomy(nodes=nodes, word_index=frozen_index, word_count=word_count)


def serialize_taxonomy(taxonomy: Taxonomy) -> str:
    """Emit the file format back out; parsing the result reproduces the input."""
    lines = []
    for node in taxonomy.nodes:
        lines.append(f"{node.depth}\t{_FILE_KIND[node.kind]}\t{node.label}")
    return "\n".join(lines) + "\n"


def senses(taxonomy: Taxonomy, word: str) -> list[ConceptId]:
    """All word-node ids whose case-folded label matches, in flat order.

    Unknown words yield an empty list.
    """
    return list(taxonomy.word_index.get(word.casefold(), ()))


def lowest_super_ordinate(taxonomy: Taxonomy, a: ConceptId, b: ConceptId) -> ConceptId:
    """The deepest node that is an ancestor-or-self of both concepts."""
    nodes = taxonomy.nodes
    na, nb = taxonomy.node(a), taxonomy.node(b)
    while na.depth > nb.depth:
        na = nodes[na.parent]  # type: ignore[index]
    while nb.depth > na.depth:
        nb = nodes[nb.parent]  # type: ignore[index]
    while na.id != nb.id:
        na = nodes[na.parent]  # type: ignore[index]
        nb = nodes[nb.parent]  # type: ignore[index]
    return na.id


def edge_distance(taxonomy: Taxonomy, a: ConceptId, b: ConceptId) -> int:
    """Number of edges on the unique tree path between two concepts."""
    ls = lowest_super_ordinate(taxonomy, a, b)
    nodes = taxonomy.nodes
    return nodes[a].depth + nodes[b].depth - 2 * nodes[ls].depth


def intervening_count(taxonomy: Taxonomy, a: ConceptId, b: ConceptId) -> int:
    """Words strictly between two word entries in flat lexicon order.

    Adjacent entries have 0 intervening words, as does a pair of identical
    positions. Both concepts must be word nodes.
    """
    na, nb = taxonomy.node(a), taxonomy.node(b)
    for n in (na, nb):
        if not n.is_word:
            raise ValueError(f"concept {n.id} ({n.label!r}) is not a word entry")
    gap = abs(na.flat_pos - nb.flat_pos)  # type: ignore[operator]
    return gap - 1 if gap > 0 else 0


def concept_path(taxonomy: Taxonomy, cid: ConceptId) -> str:
    """Labels from the root down to the concept, '/'-joined."""
    parts: list[str] = []
    node: Node | None = taxonomy.node(cid)
    while node is not None:
        parts.append(node.label)
        node = taxonomy.nodes[node.parent] if node.parent is not None else None
    return "/".join(reversed(parts))
