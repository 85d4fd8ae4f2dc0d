"""Inflection-class registry: plural stem templates and suffix paradigms.

One registry row per class.  The row key is the inflectional code minus the
gender flag (tag-singular-plural-root), mirroring how each class gets its own
generation recipe; the row stores the concrete surface template for the
plural stem plus the suffix paradigms of the singular and the plural.

Template strings are written over the plural surface root: a digit emits
radical k, ``=k`` asserts radical k repeats the previous one and emits the
gemination mark instead, anything else is a literal.  Glottal-stop radicals
are seated from their orthographic context when the stem is rendered.
"""

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import bn
from .codes import HAMZA, InflectionalCode
from .errors import ArityMismatch, UnknownClass

PARADIGM_IDS = ("triptote", "diptote", "ap-final", "defective-iy", "invariable-aY")


@dataclass(frozen=True)
class InflectionClass:
    key: str
    bp_template: str
    sg_paradigm: str
    bp_paradigm: str


class ClassRegistry:
    """Immutable after load; shared freely."""

    def __init__(self, rows: dict[str, InflectionClass]):
        self._rows = rows

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self):
        return iter(self._rows.values())

    def resolve(self, code: InflectionalCode) -> InflectionClass:
        key = code.class_key
        row = self._rows.get(key)
        if row is None:
            prefix = f"{code.class_tag}-{code.sg_code}-{code.bp_label}-"
            nearest = sorted(k for k in self._rows if k.startswith(prefix))[:3]
            if not nearest:
                nearest = sorted(k for k in self._rows if f"-{code.bp_label}-" in k)[:3]
            raise UnknownClass(key, nearest)
        return row

    def bp_labels(self) -> set[str]:
        return {k.split("-")[2] for k in self._rows}

    def pattern_pairs(self) -> set[tuple[str, str]]:
        return {(k.split("-")[1], k.split("-")[2]) for k in self._rows}


@lru_cache(maxsize=1)
def load_registry() -> ClassRegistry:
    # Safe to cache: a registry is immutable after load.
    text = resources.files(__package__).joinpath("data/classes.tsv").read_text("utf-8")
    return parse_registry(text)


def parse_registry(text: str) -> ClassRegistry:
    rows: dict[str, InflectionClass] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise ValueError(f"classes registry line {lineno}: expected 4 tab-separated fields")
        key, template, sg_par, bp_par = parts
        if sg_par not in PARADIGM_IDS or bp_par not in PARADIGM_IDS:
            raise ValueError(f"classes registry line {lineno}: unknown paradigm id")
        if key in rows:
            raise ValueError(f"classes registry line {lineno}: duplicate key {key}")
        rows[key] = InflectionClass(key, template, sg_par, bp_par)
    return ClassRegistry(rows)


def resolve_class(code: InflectionalCode, registry: ClassRegistry | None = None) -> InflectionClass:
    registry = registry or load_registry()
    return registry.resolve(code)


_RANK = {"i": 3, "iy": 3, "u": 2, "uw": 2, "a": 1}


def resolve_hamza(left: str, right: str, position: str) -> str:
    """Pick the glottal-stop allograph for an orthographic context.

    ``left``/``right`` are the neighbouring vocalic contexts: a short vowel
    (a/u/i), a long vowel (aA/iy/uw), the silent mark o, or "" at a word
    boundary.  Total function; every seed stem that carries a glottal stop
    exercises it.
    """
    if position == "initial":
        return "I" if right.startswith("i") else "O"
    if position == "final":
        if left == "a":
            return "O"
        if left == "u":
            return "W"
        if left == "i":
            return "e"
        return "c"  # after a long vowel or silence
    # medial: the stronger neighbouring vowel picks the seat (i > u > a);
    # long alif on the left weakens to the line form unless i or u follows.
    lr = _RANK.get(left, 0)
    rr = _RANK.get(right, 0)
    top = max(lr, rr)
    if top == 3:
        return "e"
    if top == 2:
        return "W"
    if top == 1:
        if left == "aA":
            return "c"
        return "O"
    return "c"


def _left_context(chars: list[str], i: int) -> str:
    """Vocalic context immediately before position i."""
    if i == 0:
        return ""
    c = chars[i - 1]
    if c in "aui":
        return c
    if c == bn.SILENT:
        if i >= 2 and chars[i - 2] in "Ayw":
            if chars[i - 2] == "A":
                return "aA"
            if i >= 3 and chars[i - 3] == "i" and chars[i - 2] == "y":
                return "iy"
            if i >= 3 and chars[i - 3] == "u" and chars[i - 2] == "w":
                return "uw"
        return bn.SILENT
    if c == "A" or c == "C":
        return "aA"
    if c == "y" and i >= 2 and chars[i - 2] == "i":
        return "iy"
    if c == "w" and i >= 2 and chars[i - 2] == "u":
        return "uw"
    return bn.SILENT


def _right_context(chars: list[str], i: int) -> str:
    """Vocalic context immediately after position i."""
    if i + 1 >= len(chars):
        return ""
    c = chars[i + 1]
    if c in "aui":
        return c
    if c in bn.TANWIN:
        return {"F": "a", "N": "u", "K": "i"}[c]
    return bn.SILENT


def substitute_madda(text: str) -> str:
    """Mandatory contractions of glottal stop + long a spellings."""
    out = text.replace("OaOo", "C").replace("OaAo", "C")
    return out.replace("OaA", "C")


def seat_hamzas(chars: list[str]) -> str:
    """Replace abstract glottal stops with context-appropriate allographs."""
    resolved = list(chars)
    for i, c in enumerate(resolved):
        if c != HAMZA:
            continue
        if i == 0:
            position = "initial"
        elif i == len(resolved) - 1:
            position = "final"
        else:
            position = "medial"
        resolved[i] = resolve_hamza(_left_context(resolved, i), _right_context(resolved, i), position)
    return substitute_madda("".join(resolved))


def render_bp_stem(root, cls: InflectionClass) -> str:
    """Interdigitate the plural surface root with the class template."""
    template = cls.bp_template
    out: list[str] = []
    used: list[int] = []
    i = 0
    while i < len(template):
        ch = template[i]
        if ch.isdigit():
            k = int(ch)
            if k > len(root.radicals):
                raise ArityMismatch(f"template {template} needs radical {k}; root {root} has {len(root)}")
            out.append(root.radicals[k - 1])
            used.append(k)
            i += 1
        elif ch == "=":
            k = int(template[i + 1])
            if k > len(root.radicals):
                raise ArityMismatch(f"template {template} needs radical {k}; root {root} has {len(root)}")
            prev = next(c for c in reversed(out) if c not in bn.DIACRITICS)
            if root.radicals[k - 1] != prev:
                raise ArityMismatch(f"template {template} geminates radical {k}, which differs from its neighbour")
            out.append(bn.SHADDA)
            used.append(k)
            i += 2
        else:
            out.append(ch)
            i += 1
    if sorted(used) != list(range(1, len(root.radicals) + 1)):
        raise ArityMismatch(f"template {template} covers radicals {sorted(used)} for a {len(root)}-radical root")
    return seat_hamzas(out)
