"""Word frequencies, probabilities, and information content over a taxonomy.

A word's probability is its corpus count (floored for unseen words) split
evenly across its senses and divided by the corpus size N. Information
content is ``-log(p)``; the log base only rescales values.

Node IC propagates upward by the min rule: an internal node's IC is the
minimum IC (equivalently the maximum probability) over all word entries in
its subtree, so IC never decreases walking down from the root. A cumulative
"sum" mode is also available for comparison, where a node's probability is
the summed subtree frequency over N; it is not the default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO

from .errors import ConfigError, DataError, ParseError, UnknownWordError
from .taxonomy import KIND_WORD, ConceptId, Taxonomy, senses

IC_MODE_MIN = "min"
IC_MODE_SUM = "sum"


@dataclass(frozen=True)
class FrequencyTable:
    """Corpus counts keyed by case-folded word, plus the corpus size N."""

    counts: dict[str, float]
    total_n: float

    def __post_init__(self) -> None:
        if not self.total_n > 0:
            raise DataError("corpus size N must be positive")
        for word, count in self.counts.items():
            if count > self.total_n:
                raise DataError(
                    f"count for {word!r} ({count}) exceeds corpus size N ({self.total_n})"
                )

    def count(self, word: str) -> float:
        return self.counts.get(word.casefold(), 0.0)


@dataclass(frozen=True)
class IcConfig:
    """Tuning knobs for information-content computation."""

    log_base: float = 2.0
    freq_floor: float = 1.0
    mode: str = IC_MODE_MIN

    def __post_init__(self) -> None:
        if not self.log_base > 1.0:
            raise ConfigError(f"log base must be > 1, got {self.log_base}")
        if not self.freq_floor > 0.0:
            raise ConfigError(f"frequency floor must be positive, got {self.freq_floor}")
        if self.mode not in (IC_MODE_MIN, IC_MODE_SUM):
            raise ConfigError(f"ic mode must be 'min' or 'sum', got {self.mode!r}")


@dataclass(frozen=True)
class IcTable:
    """Per-concept probability and information content, dense by concept id."""

    node_p: tuple[float, ...]
    node_ic: tuple[float, ...]
    log_base: float
    freq_floor: float
    mode: str

    def p(self, cid: ConceptId) -> float:
        return self.node_p[cid]

    def ic(self, cid: ConceptId) -> float:
        return self.node_ic[cid]


def ingest_frequencies(
    source: str | bytes | IO[str] | IO[bytes],
    total_n: float | None = None,
    name: str | None = None,
) -> FrequencyTable:
    """Read ``<word>\\t<count>`` lines into a FrequencyTable.

    Words are case-folded and duplicate lines are summed. N defaults to the
    sum of all counts; pass ``total_n`` to override. ``#`` comments and blank
    lines are skipped.
    """
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, bytes):
        data = data.decode("utf-8")

    counts: dict[str, float] = {}
    for lineno, raw in enumerate(data.split("\n"), start=1):
        if not raw.strip() or raw.startswith("#"):
            continue
        parts = raw.split("\t")
        if len(parts) != 2:
            raise ParseError(
                f"expected 2 tab-separated fields, found {len(parts)}", lineno, name
            )
        word, count_text = parts
        if not word:
            raise ParseError("empty word field", lineno, name)
        try:
            count = float(count_text)
        except ValueError:
            raise ParseError(f"count is not a number: {count_text!r}", lineno, name) from None
        if not math.isfinite(count):
            raise ParseError(f"count is not finite: {count_text!r}", lineno, name)
        if count < 0:
            raise ParseError(f"negative count: {count_text}", lineno, name)
        key = word.casefold()
        counts[key] = counts.get(key, 0.0) + count

    if not counts and total_n is None:
        raise DataError("empty frequency input and no corpus size override")
    effective_n = math.fsum(counts.values()) if total_n is None else float(total_n)
    return FrequencyTable(counts=counts, total_n=effective_n)


def word_sense_ic(
    freqs: FrequencyTable, taxonomy: Taxonomy, word: str, cfg: IcConfig = IcConfig()
) -> float:
    """Information content of each sense of ``word``.

    The word's count (or the floor, if unseen) is divided by the number of
    senses it has in this taxonomy, so every sense of a word carries the same
    IC value.
    """
    n_senses = len(senses(taxonomy, word))
    if n_senses == 0:
        raise UnknownWordError(word)
    _check_floor(freqs, cfg)
    p = max(freqs.count(word), cfg.freq_floor) / (n_senses * freqs.total_n)
    return -math.log(p) / math.log(cfg.log_base)


def _check_floor(freqs: FrequencyTable, cfg: IcConfig) -> None:
    if cfg.freq_floor > freqs.total_n:
        raise ConfigError(
            f"frequency floor ({cfg.freq_floor}) exceeds corpus size N ({freqs.total_n})"
        )


def compute_node_ic(
    taxonomy: Taxonomy, freqs: FrequencyTable, cfg: IcConfig = IcConfig()
) -> IcTable:
    """Assign probability and IC to every concept in the taxonomy.

    Word entries get their per-sense probability. In the default min mode,
    each internal node takes the maximum probability (minimum IC) found among
    word entries in its subtree; internal nodes with no word entries beneath
    them fall back to the floor probability. In sum mode, subtree frequencies
    are accumulated and divided by N (capped at probability 1).
    """
    if taxonomy.word_count == 0:
        raise DataError("taxonomy contains no word entries")
    _check_floor(freqs, cfg)

    n = freqs.total_n
    log_base = math.log(cfg.log_base)

    # Per-sense probability, computed once per distinct surface word.
    word_p: dict[str, float] = {}
    for word, sense_ids in taxonomy.word_index.items():
        word_p[word] = max(freqs.count(word), cfg.freq_floor) / (len(sense_ids) * n)

    size = len(taxonomy.nodes)
    p = [0.0] * size
    if cfg.mode == IC_MODE_MIN:
        floor_p = cfg.freq_floor / n
        # Children always have larger ids than parents, so one reverse pass
        # sees every child before its parent.
        for node in reversed(taxonomy.nodes):
            if node.kind == KIND_WORD:
                p[node.id] = word_p[node.label.casefold()]
            elif node.children:
                p[node.id] = max(p[c] for c in node.children)
            else:
                p[node.id] = floor_p
    else:
        cumulative = [0.0] * size
        for node in reversed(taxonomy.nodes):
            if node.kind == KIND_WORD:
                cumulative[node.id] = word_p[node.label.casefold()] * n
            elif node.children:
                cumulative[node.id] = math.fsum(cumulative[c] for c in node.children)
            else:
                cumulative[node.id] = cfg.freq_floor
            p[node.id] = min(1.0, cumulative[node.id] / n)

    ic = tuple(-math.log(x) / log_base for x in p)
    return IcTable(
        node_p=tuple(p),
        node_ic=ic,
        log_base=cfg.log_base,
        freq_floor=cfg.freq_floor,
        mode=cfg.mode,
    )
