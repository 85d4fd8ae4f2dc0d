"""Compiled full-form dictionary: a minimized acyclic automaton.

The automaton is the minimal deterministic acyclic automaton of the surface
strings alone; per-state subtree word counts turn it into a perfect hash, so
a matched form's lexicographic rank indexes its analysis payload list.  That
keeps suffix tails shared across the whole lexicon, which is what makes the
serialized artifact small.

Payloads do not name entries directly: they hold the features, the
inflectional code and a rewrite that reconstructs the lemma from the matched
surface (drop k characters, append a tail).  Entries of the same class
therefore share payload records, and entry ids are recovered from
(lemma, code) when the dictionary is loaded.

Definite cells are stored without the article: Al- is a determiner segment
(the segmenter restores it), so a definite surface in the automaton is the
noun part only, carrying the D feature.

Diacritic transitions are skippable during diacritic-optional lookup: the
dictionary may carry diacritics the query omits, but a diacritic present in
the query must match the dictionary exactly.
"""

import struct
import sys
from dataclasses import dataclass

from . import bn
from .classes import ClassRegistry
from .lexicon import LexiconFile
from .paradigm import FeatureBundle, inflect

MAGIC = b"TKDC"
VERSION = 1


@dataclass(frozen=True)
class Payload:
    """Analysis record attached to a form (entry-independent)."""

    drop: int           # characters to drop from the surface ...
    append: str         # ... and tail to append, giving the lemma
    code: str           # full inflectional code text
    tag: str            # feature tag, e.g. N:q:i:G
    standalone: bool    # usable without an attached pronoun

    def sort_key(self):
        return (self.code, self.tag, self.drop, self.append, not self.standalone)


@dataclass(frozen=True)
class Analysis:
    surface: str        # the dictionary form that matched
    lemma: str
    code: str
    features: FeatureBundle
    standalone: bool
    entry_id: int

    def line(self) -> str:
        return f"{self.surface}\t{self.lemma}\t{self.code}\t{self.features.tag()}"


class FormDictionary:
    """Minimal acyclic automaton plus rank-indexed analysis payloads."""

    def __init__(self, transitions, finals, counts, payloads_by_rank):
        self.transitions = transitions        # per state: tuple of (label, target), sorted
        self.finals = finals                  # per state: bool
        self.counts = counts                  # per state: words accepted in its subtree
        self.payloads_by_rank = payloads_by_rank
        self.root = 0
        self._entry_ids: dict[tuple[str, str], int] = {}

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, words: dict[str, list["Payload"]]) -> "FormDictionary":
        """Trie insertion, bottom-up minimization, subtree word counts."""
        children: list[dict[str, int]] = [{}]
        final: list[bool] = [False]

        ordered = sorted(words)
        for word in ordered:
            node = 0
            for ch in word:
                nxt = children[node].get(ch)
                if nxt is None:
                    nxt = len(children)
                    children[node][ch] = nxt
                    children.append({})
                    final.append(False)
                node = nxt
            final[node] = True

        # Two states merge iff finality and labelled successors agree: that
        # is right-language equality in an acyclic automaton.
        registry: dict[tuple, int] = {}
        min_trans: list[tuple] = []
        min_final: list[bool] = []

        old_limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old_limit, 10000))

        def minimize(node: int) -> int:
            edges = tuple(sorted((ch, minimize(child)) for ch, child in children[node].items()))
            signature = (final[node], edges)
            state = registry.get(signature)
            if state is None:
                state = len(min_trans)
                registry[signature] = state
                min_trans.append(edges)
                min_final.append(final[node])
            return state

        root = minimize(0)
        sys.setrecursionlimit(old_limit)

        # Renumber breadth-first from the root so the artifact is canonical.
        order = [root]
        seen = {root}
        for state in order:
            for _, target in min_trans[state]:
                if target not in seen:
                    seen.add(target)
                    order.append(target)
        remap = {old: new for new, old in enumerate(order)}
        transitions = [tuple((ch, remap[t]) for ch, t in min_trans[old]) for old in order]
        finals = [min_final[old] for old in order]

        counts = [0] * len(transitions)
        done = [False] * len(transitions)

        def count(state: int) -> int:
            if done[state]:
                return counts[state]
            total = 1 if finals[state] else 0
            for _, target in transitions[state]:
                total += count(target)
            counts[state] = total
            done[state] = True
            return total

        count(0)
        payloads_by_rank = [tuple(sorted(set(words[w]), key=Payload.sort_key)) for w in ordered]
        return cls(transitions, finals, counts, payloads_by_rank)

    def attach_lexicon(self, lex: LexiconFile) -> None:
        self._entry_ids = {e.key: e.entry_id for e in lex.entries}

    # -- lookup ------------------------------------------------------------

    def _analysis(self, path: str, payload: Payload) -> Analysis:
        lemma = path[: len(path) - payload.drop] + payload.append
        entry_id = self._entry_ids.get((lemma, payload.code), -1)
        return Analysis(path, lemma, payload.code, FeatureBundle.from_tag(payload.tag), payload.standalone, entry_id)

    def lookup(self, surface: str, mode: str = "strict") -> list[Analysis]:
        """Analyses of a surface string; empty list when absent.

        strict: exact traversal.  diacritic-optional: dictionary diacritics
        may be skipped, but any diacritic present in the query must match.
        """
        if mode == "strict":
            state, rank = self.root, 0
            for ch in surface:
                step = self._step(state, rank, ch)
                if step is None:
                    return []
                state, rank = step
            if not self.finals[state]:
                return []
            return [self._analysis(surface, p) for p in self.payloads_by_rank[rank]]
        if mode != "diacritic-optional":
            raise ValueError(f"unknown lookup mode {mode!r}")

        results: dict[tuple, Analysis] = {}

        def walk(state: int, rank: int, qi: int, path: list[str]) -> None:
            if qi == len(surface) and self.finals[state]:
                for p in self.payloads_by_rank[rank]:
                    a = self._analysis("".join(path), p)
                    results.setdefault((a.surface, p.sort_key()), a)
            base = rank + (1 if self.finals[state] else 0)
            skipped = base
            for ch, target in self.transitions[state]:
                if qi < len(surface) and ch == surface[qi]:
                    path.append(ch)
                    walk(target, skipped, qi + 1, path)
                    path.pop()
                if bn.is_diacritic(ch):
                    path.append(ch)
                    walk(target, skipped, qi, path)
                    path.pop()
                skipped += self.counts[target]

        walk(self.root, 0, 0, [])
        return sorted(results.values(), key=lambda a: (a.surface, a.code, a.features.tag()))

    def _step(self, state: int, rank: int, ch: str):
        """One strict transition; returns (target, rank at target)."""
        rank += 1 if self.finals[state] else 0
        for label, target in self.transitions[state]:
            if label == ch:
                return target, rank
            rank += self.counts[target]
        return None

    # -- enumeration -------------------------------------------------------

    def forms(self):
        """Yield (surface, payloads) in lexicographic (= rank) order."""
        rank = 0
        stack = [(self.root, "")]
        while stack:
            state, prefix = stack.pop()
            if self.finals[state]:
                yield prefix, self.payloads_by_rank[rank]
                rank += 1
            for ch, target in sorted(self.transitions[state], reverse=True):
                stack.append((target, prefix + ch))

    def dump_text(self) -> str:
        lines = []
        for surface, payloads in self.forms():
            for p in payloads:
                lines.append(self._analysis(surface, p).line())
        return "\n".join(lines) + ("\n" if lines else "")

    # -- stats -------------------------------------------------------------

    def stats(self) -> dict:
        n_analyses = sum(len(p) for p in self.payloads_by_rank)
        n_trans = sum(len(t) for t in self.transitions)
        binary = self.to_bytes()
        text = self.dump_text().encode("utf-8")
        return {
            "forms": len(self.payloads_by_rank),
            "analyses": n_analyses,
            "states": len(self.transitions),
            "transitions": n_trans,
            "serialized_bytes": len(binary),
            "listing_bytes": len(text),
        }

    # -- serialization -----------------------------------------------------
    #
    # Little-endian byte layout, in order:
    #   header:  magic "TKDC", u16 version, u32 states, u32 transitions,
    #            u32 forms, u32 payload sets, u32 set refs, u32 payloads,
    #            u32 strings
    #   state:   u32 subtree word count, u8 flags (bit0 final), u8 fanout
    #   trans:   u8 label, u32 target            (per state, label-sorted)
    #   form:    u16 payload-set id              (rank order)
    #   set:     u8 length                       (ids assigned in first-use order)
    #   setref:  u16 payload id                  (concatenated set contents)
    #   payload: u16 append string id, u16 code string id, u16 tag string id,
    #            u8 drop, u8 flags (bit0 standalone)
    #   string:  u16 byte length, utf-8 bytes    (ids in first-use order)

    def to_bytes(self) -> bytes:
        strings: dict[str, int] = {}
        blob = bytearray()

        def intern(s: str) -> int:
            if s not in strings:
                strings[s] = len(strings)
                raw = s.encode("utf-8")
                blob.extend(struct.pack("<H", len(raw)))
                blob.extend(raw)
            return strings[s]

        payload_ids: dict[Payload, int] = {}
        payload_rows = bytearray()

        def payload_id(p: Payload) -> int:
            if p not in payload_ids:
                payload_ids[p] = len(payload_ids)
                payload_rows.extend(struct.pack(
                    "<HHHBB", intern(p.append), intern(p.code), intern(p.tag), p.drop, 1 if p.standalone else 0,
                ))
            return payload_ids[p]

        sets: dict[tuple, int] = {}
        set_lens = bytearray()
        set_refs = bytearray()
        form_rows = bytearray()
        for payloads in self.payloads_by_rank:
            key = tuple(payload_id(p) for p in payloads)
            if key not in sets:
                sets[key] = len(sets)
                set_lens.extend(struct.pack("<B", len(key)))
                for pid in key:
                    set_refs.extend(struct.pack("<H", pid))
            form_rows.extend(struct.pack("<H", sets[key]))

        states = bytearray()
        trans = bytearray()
        n_trans = 0
        for state in range(len(self.transitions)):
            states.extend(struct.pack("<IBB", self.counts[state], 1 if self.finals[state] else 0, len(self.transitions[state])))
            for ch, target in self.transitions[state]:
                trans.extend(struct.pack("<BI", ord(ch), target))
                n_trans += 1

        header = struct.pack(
            "<4sHIIIIIII",
            MAGIC, VERSION,
            len(self.transitions), n_trans, len(self.payloads_by_rank),
            len(sets), len(set_refs) // 2, len(payload_ids), len(strings),
        )
        return bytes(header + states + trans + form_rows + set_lens + set_refs + payload_rows + blob)

    @classmethod
    def from_bytes(cls, data: bytes) -> "FormDictionary":
        head_fmt = "<4sHIIIIIII"
        magic, version, n_states, n_trans, n_forms, n_sets, n_refs, n_payloads, n_strings = struct.unpack_from(head_fmt, data, 0)
        if magic != MAGIC:
            raise ValueError("not a compiled dictionary (bad magic bytes)")
        if version != VERSION:
            raise ValueError(f"unsupported dictionary version {version}")
        off = struct.calcsize(head_fmt)

        counts, finals, fanouts = [], [], []
        for i in range(n_states):
            c, fl, fan = struct.unpack_from("<IBB", data, off + 6 * i)
            counts.append(c)
            finals.append(bool(fl & 1))
            fanouts.append(fan)
        off += 6 * n_states

        flat = [struct.unpack_from("<BI", data, off + 5 * i) for i in range(n_trans)]
        off += 5 * n_trans
        transitions = []
        pos = 0
        for fan in fanouts:
            transitions.append(tuple((chr(b), t) for b, t in flat[pos: pos + fan]))
            pos += fan

        form_sets = [struct.unpack_from("<H", data, off + 2 * i)[0] for i in range(n_forms)]
        off += 2 * n_forms
        set_lens = [data[off + i] for i in range(n_sets)]
        off += n_sets
        refs = [struct.unpack_from("<H", data, off + 2 * i)[0] for i in range(n_refs)]
        off += 2 * n_refs
        payload_rows = [struct.unpack_from("<HHHBB", data, off + 8 * i) for i in range(n_payloads)]
        off += 8 * n_payloads

        string_table = []
        for _ in range(n_strings):
            (length,) = struct.unpack_from("<H", data, off)
            off += 2
            string_table.append(data[off: off + length].decode("utf-8"))
            off += length

        payloads = [
            Payload(drop, string_table[a], string_table[c], string_table[t], bool(flag & 1))
            for a, c, t, drop, flag in payload_rows
        ]
        set_contents = []
        pos = 0
        for n in set_lens:
            set_contents.append(tuple(payloads[refs[pos + i]] for i in range(n)))
            pos += n
        payloads_by_rank = [set_contents[sid] for sid in form_sets]
        return cls(transitions, finals, counts, payloads_by_rank)

    def save(self, path) -> None:
        with open(path, "wb") as fh:
            fh.write(self.to_bytes())

    @classmethod
    def load(cls, path, lexicon: LexiconFile | None = None) -> "FormDictionary":
        with open(path, "rb") as fh:
            d = cls.from_bytes(fh.read())
        if lexicon is not None:
            d.attach_lexicon(lexicon)
        return d


def dictionary_key(form) -> str:
    """Automaton key of a generated form (definites drop the article)."""
    if form.features.definiteness == "D":
        return form.surface[2:]
    return form.surface


def compile_lexicon(lex: LexiconFile, registry: ClassRegistry) -> tuple[FormDictionary, list[str]]:
    """Generate every entry's paradigm and build the automaton.

    Entries whose generation fails are reported, not fatal; the dictionary is
    built from the rest.
    """
    words: dict[str, list[Payload]] = {}
    failures: list[str] = []
    for entry in lex.entries:
        try:
            forms = inflect(entry, registry)
        except Exception as exc:  # noqa: BLE001 - reported per entry
            failures.append(f"{entry.lemma},{entry.code}: {exc}")
            continue
        for form in forms:
            key = dictionary_key(form)
            lcp = 0
            limit = min(len(key), len(entry.lemma))
            while lcp < limit and key[lcp] == entry.lemma[lcp]:
                lcp += 1
            payload = Payload(
                drop=len(key) - lcp,
                append=entry.lemma[lcp:],
                code=entry.code.text,
                tag=form.features.tag(),
                standalone=form.standalone,
            )
            words.setdefault(key, []).append(payload)
    d = FormDictionary.build(words)
    d.attach_lexicon(lex)
    return d, failures
