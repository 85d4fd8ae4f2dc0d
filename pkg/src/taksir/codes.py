"""Inflectional codes and surface-root arithmetic.

A dictionary entry pairs a fully diacritized singular stem with a code of the
form ``$TAG-GENDER-SGCODE-BPLABEL-ROOTCODE[+Hum]``.  The singular-pattern code
(e.g. ``FvEvL``) records only slot positions, long-vowel positions (``vv``)
and pattern-owned geminations; matching it against the lemma yields the
singular surface root.  The root code (e.g. ``12y``) then maps that root onto
the plural surface root: digits copy singular radicals, letters insert
literals, a final ``G`` geminates the last radical.
"""

from dataclasses import dataclass, field

from . import bn
from .errors import (
    AmbiguousPatternMatch,
    ArityMismatch,
    IndexOutOfRange,
    MalformedCode,
    NotFullyDiacritized,
    UnknownBpLabel,
)

#: Abstract glottal-stop radical.  Lemma letters c, C, O, W, I, e all map to
#: this marker during extraction, so root codes can reference the glottal stop
#: uniformly (as the letter ``h``); the concrete spelling is chosen only when
#: a stem is rendered.
HAMZA = "'"

SLOT_LETTERS = "FELBDJ"

#: Long-vowel letter expected after each short vowel in a ``vv`` position.
LONG_OF = {"a": "A", "i": "y", "u": "w"}

#: Plural pattern labels accepted in codes.  Labels are the familiar deep
#: names; the concrete stem shapes live in the class registry.
KNOWN_BP_LABELS = frozenset({
    "FuEaL", "FiEaL", "FuEuL", "FuEuuL", "FuEuuLap", "FiEaaL",
    "FiEoLap", "FuEoLap", "FaEoLap", "FaEaLap", "FuEoLaan", "FuEEaL",
    "OaFoEaaL", "OaFoEiLap", "FuEaLaaB",
    "FaEaaLiB", "FaEaaLiBap", "FaEaaLiiB",
})

#: Fixes for inconsistent code spellings found in source material.
CODE_RESPELLINGS = {
    "FaEaLiB": "FaEaaLiB",
    "FvEvLvBvvdvvd": "FvEvLvBvvDvvJ",
}

#: Class tag -> singular suffix stripped before pattern matching.  The digit
#: in the tag is the slot count of the singular-pattern code; the tail names
#: the lemma ending.  Extensible: new tags are added here.
CLASS_TAG_SUFFIXES = {
    "N200": "", "N300": "", "N3ow": "", "N400": "", "N500": "", "N600": "",
    "N3ap": "ap", "N4ap": "ap", "N5ap": "ap",
    "N3Ap": "p", "N4Ap": "p",          # taa marbuta directly after long alif
    "N3iy": "iyG", "N4iy": "iyG",
    "N4iyap": "iyGap",
    "N3aY": "aY",
    "N3an": "aAon",
    "N3aniy": "aAoniyG",
    "N3ac": "aAoc",
}


@dataclass(frozen=True)
class SingularPatternCode:
    """Parsed singular-pattern code, e.g. FvEvL or FvEEvvL."""

    text: str
    tokens: tuple  # ("slot", rank) | ("gem_slot", rank) | ("v",) | ("vv",)

    @property
    def arity(self) -> int:
        return sum(1 for t in self.tokens if t[0] in ("slot", "gem_slot"))

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class RootCode:
    """Parsed root code, e.g. 123, 12y, h234, 123G."""

    text: str
    tokens: tuple  # ("copy", k) | ("lit", char) | ("gemfinal",)

    @property
    def output_arity(self) -> int:
        return sum(1 for t in self.tokens if t[0] != "gemfinal")

    @property
    def geminate_final(self) -> bool:
        return any(t[0] == "gemfinal" for t in self.tokens)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class InflectionalCode:
    class_tag: str
    gender_flag: str            # m | f | g
    sg_code: SingularPatternCode
    bp_label: str
    root_code: RootCode
    human: bool = False

    @property
    def text(self) -> str:
        tail = "+Hum" if self.human else ""
        return f"{self.class_tag}-{self.gender_flag}-{self.sg_code}-{self.bp_label}-{self.root_code}{tail}"

    @property
    def class_key(self) -> str:
        """Registry key: the code without the gender flag and +Hum."""
        return f"{self.class_tag}-{self.sg_code}-{self.bp_label}-{self.root_code}"

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class SurfaceRoot:
    """Ordered radicals of a stem; glottal stop stored abstractly."""

    radicals: tuple
    geminate_flags: tuple = ()
    positions: tuple = ()       # 1-based character indices in the lemma

    def __post_init__(self):
        if not self.geminate_flags:
            object.__setattr__(self, "geminate_flags", (False,) * len(self.radicals))

    def __len__(self) -> int:
        return len(self.radicals)

    def __str__(self) -> str:
        return "".join("h" if r == HAMZA else r for r in self.radicals)


def parse_sg_code(text: str) -> SingularPatternCode:
    """Parse a singular-pattern code, tolerating case noise (FvEvVl -> FvEvvL).

    Slot letters are position-determined (F,E,L,B,D,J in rank order), so a
    case-insensitive structural parse recovers the canonical spelling.
    """
    raw = CODE_RESPELLINGS.get(text, text)
    tokens: list = []
    next_rank = 1
    for ch in raw:
        if ch in ("v", "V"):
            tokens.append(("v",))
            continue
        upper = ch.upper()
        if upper not in SLOT_LETTERS:
            raise MalformedCode(f"bad character {ch!r} in singular-pattern code {text!r}")
        rank = SLOT_LETTERS.index(upper) + 1
        if rank == next_rank - 1 and tokens and tokens[-1] == ("slot", rank):
            tokens[-1] = ("gem_slot", rank)
        elif rank == next_rank:
            tokens.append(("slot", rank))
            next_rank += 1
        else:
            raise MalformedCode(f"slot letters out of order in {text!r}")
    # vv: collapse adjacent v marks
    merged: list = []
    for tok in tokens:
        if tok == ("v",) and merged and merged[-1] == ("v",):
            merged[-1] = ("vv",)
        elif tok == ("v",) and merged and merged[-1] == ("vv",):
            raise MalformedCode(f"more than two vowel marks in a row in {text!r}")
        else:
            merged.append(tok)
    arity = sum(1 for t in merged if t[0] in ("slot", "gem_slot"))
    if not 2 <= arity <= 6:
        raise MalformedCode(f"{text!r} has {arity} slots; expected 2-6")
    canon = []
    i = 0
    for tok in merged:
        if tok[0] == "slot":
            canon.append(SLOT_LETTERS[tok[1] - 1])
        elif tok[0] == "gem_slot":
            canon.append(SLOT_LETTERS[tok[1] - 1] * 2)
        elif tok == ("v",):
            canon.append("v")
        else:
            canon.append("vv")
    return SingularPatternCode("".join(canon), tuple(merged))


ROOT_LITERALS = "wyAYhm"


def parse_root_code(text: str, max_index: int | None = None) -> RootCode:
    tokens: list = []
    for i, ch in enumerate(text):
        if ch.isdigit():
            k = int(ch)
            if not 1 <= k <= 6:
                raise MalformedCode(f"bad radical index {ch} in root code {text!r}")
            if max_index is not None and k > max_index:
                raise ArityMismatch(f"root code {text!r} copies radical {k} but the singular has {max_index}")
            tokens.append(("copy", k))
        elif ch == "G":
            if i != len(text) - 1:
                raise MalformedCode(f"G must be last in root code {text!r}")
            tokens.append(("gemfinal",))
        elif ch in ROOT_LITERALS:
            tokens.append(("lit", HAMZA if ch == "h" else ch))
        else:
            raise MalformedCode(f"bad character {ch!r} in root code {text!r}")
    if not tokens:
        raise MalformedCode("empty root code")
    return RootCode(text, tuple(tokens))


def parse_code(text: str) -> InflectionalCode:
    """Parse ``$TAG-GENDER-SGCODE-BPLABEL-ROOTCODE[+Hum]``."""
    body = text.strip()
    if body.startswith("$"):
        body = body[1:]
    human = False
    if body.endswith("+Hum"):
        human = True
        body = body[: -len("+Hum")]
    parts = body.split("-")
    if len(parts) != 5:
        raise MalformedCode(f"code {text!r} has {len(parts)} components; expected tag-gender-singular-plural-root")
    tag, gender, sg_text, bp_label, root_text = parts
    if tag not in CLASS_TAG_SUFFIXES:
        raise MalformedCode(f"unknown class tag {tag!r}")
    if gender not in ("m", "f", "g"):
        raise MalformedCode(f"gender flag must be m, f or g, not {gender!r}")
    sg_code = parse_sg_code(sg_text)
    if int(tag[1]) != sg_code.arity:
        raise ArityMismatch(f"tag {tag} expects {tag[1]} slots but {sg_code} has {sg_code.arity}")
    bp_label = CODE_RESPELLINGS.get(bp_label, bp_label)
    if bp_label not in KNOWN_BP_LABELS:
        raise UnknownBpLabel(bp_label, sorted(KNOWN_BP_LABELS))
    root_code = parse_root_code(root_text, max_index=sg_code.arity)
    return InflectionalCode(tag, gender, sg_code, bp_label, root_code, human)


def check_diacritization(lemma: str) -> None:
    """Every basic letter except the last must carry one diacritic (or shadda
    plus one); the madda letter C carries its long vowel itself."""
    chars = list(lemma)
    i = 0
    basics = [j for j, c in enumerate(chars) if not bn.is_diacritic(c)]
    if not basics:
        raise NotFullyDiacritized(lemma, 0)
    last_basic = basics[-1]
    while i < len(chars):
        c = chars[i]
        if bn.is_diacritic(c):
            raise NotFullyDiacritized(lemma, i + 1)  # diacritic with no carrier
        if c == "C":
            i += 1
            continue
        j = i + 1
        marks = []
        while j < len(chars) and bn.is_diacritic(chars[j]):
            marks.append(chars[j])
            j += 1
        if i == last_basic:
            if marks not in ([], [bn.SHADDA]):
                raise NotFullyDiacritized(lemma, i + 1)
        else:
            ok = (
                len(marks) == 1 and marks[0] in "auio"
            ) or (
                marks and marks[0] == bn.SHADDA and (len(marks) == 1 or (len(marks) == 2 and marks[1] in "auio"))
            )
            if not ok:
                raise NotFullyDiacritized(lemma, i + 1)
        i = j


@dataclass
class _Parse:
    radicals: list = field(default_factory=list)
    gemflags: list = field(default_factory=list)
    positions: list = field(default_factory=list)
    fallback_gem: bool = False

    def copy(self) -> "_Parse":
        return _Parse(list(self.radicals), list(self.gemflags), list(self.positions), self.fallback_gem)


def _expand(stem: str) -> tuple[list[str], list[int]]:
    """Expand C to glottal stop + long a; positions are 1-based over the
    expanded stream, so the madda letter counts as two written positions."""
    chars: list[str] = []
    for c in stem:
        if c == "C":
            chars.extend([HAMZA, "a", "A", "o"])
        else:
            chars.append(c)
    return chars, list(range(1, len(chars) + 1))


def _as_radical(c: str) -> str:
    return HAMZA if c in bn.HAMZA_LETTERS or c == HAMZA else c


def _discardable(chars: list[str], i: int) -> bool:
    """Long-vowel letters the pattern may own without a vv mark."""
    c = chars[i]
    if c == "A":
        return True
    if c == "y":
        return i > 0 and chars[i - 1] == "i"
    if c == "w":
        return i > 0 and chars[i - 1] == "u"
    return False


def extract_root(lemma: str, sg_code: SingularPatternCode, class_tag: str) -> SurfaceRoot:
    """Match the singular-pattern code against the lemma and return the root.

    The match must be unique: if the lenient long-vowel discard admits two
    distinct radical sequences, the entry needs an explicit-vv code.
    """
    check_diacritization(lemma)
    suffix = CLASS_TAG_SUFFIXES.get(class_tag)
    if suffix is None:
        raise MalformedCode(f"unknown class tag {class_tag!r}")
    if suffix:
        if not lemma.endswith(suffix):
            raise ArityMismatch(f"lemma {lemma!r} lacks the {suffix!r} ending required by {class_tag}")
        stem = lemma[: -len(suffix)]
    else:
        stem = lemma
    chars, positions = _expand(stem)
    tokens = list(sg_code.tokens)
    results: dict[tuple, _Parse] = {}
    fallback_results: dict[tuple, _Parse] = {}

    def finish(ci: int, parse: _Parse) -> None:
        # Trailing material may only be diacritics and pattern-owned long vowels.
        j = ci
        while j < len(chars):
            c = chars[j]
            if bn.is_diacritic(c):
                j += 1
            elif _discardable(chars, j):
                j += 1
                if j < len(chars) and chars[j] == bn.SILENT:
                    j += 1
            else:
                return
        key = tuple(parse.radicals)
        (fallback_results if parse.fallback_gem else results).setdefault(key, parse)

    def walk(ti: int, ci: int, parse: _Parse) -> None:
        # Discarding a pattern-owned long vowel is always a branch.
        if ci < len(chars) and not bn.is_diacritic(chars[ci]) and _discardable(chars, ci):
            skip = ci + 1
            if skip < len(chars) and chars[skip] == bn.SILENT:
                skip += 1
            walk(ti, skip, parse.copy())
        if ti == len(tokens):
            finish(ci, parse)
            return
        if ci >= len(chars):
            return
        tok = tokens[ti]
        c = chars[ci]
        if tok == ("v",):
            if c in "auio":
                walk(ti + 1, ci + 1, parse)
            return
        if tok == ("vv",):
            if c in "aiu" and ci + 1 < len(chars) and chars[ci + 1] == LONG_OF[c]:
                nxt = ci + 2
                if nxt < len(chars) and chars[nxt] == bn.SILENT:
                    nxt += 1
                walk(ti + 1, nxt, parse)
            return
        if bn.is_diacritic(c):
            return
        radical = _as_radical(c)
        geminated = ci + 1 < len(chars) and chars[ci + 1] == bn.SHADDA
        if tok[0] == "gem_slot":
            if not geminated:
                return
            p = parse.copy()
            p.radicals.append(radical)
            p.gemflags.append(True)
            p.positions.append(positions[ci])
            walk(ti + 1, ci + 2, p)
            return
        # plain slot
        if geminated:
            # A doubled letter fills this slot and the next one (the written
            # gemination straddles two radicals, as in MidGap -> M d d); when
            # no further slot exists it fills this slot alone and the
            # gemination stays with the stem (lutunGap -> l t n).  The
            # one-slot reading is a fallback: it only counts when no
            # two-slot parse of the lemma succeeds.
            nxt = ti + 1
            if nxt < len(tokens) and tokens[nxt] == ("v",):
                nxt += 1
            if nxt < len(tokens) and tokens[nxt][0] == "slot":
                p = parse.copy()
                p.radicals.extend([radical, radical])
                p.gemflags.extend([True, True])
                p.positions.extend([positions[ci], positions[ci]])
                walk(nxt + 1, ci + 2, p)
            p = parse.copy()
            p.radicals.append(radical)
            p.gemflags.append(True)
            p.positions.append(positions[ci])
            p.fallback_gem = True
            walk(ti + 1, ci + 2, p)
            return
        p = parse.copy()
        p.radicals.append(radical)
        p.gemflags.append(False)
        p.positions.append(positions[ci])
        walk(ti + 1, ci + 1, p)

    walk(0, 0, _Parse())
    chosen = results or fallback_results
    if not chosen:
        raise ArityMismatch(f"lemma {lemma!r} does not match pattern code {sg_code} (tag {class_tag})")
    if len(chosen) > 1:
        raise AmbiguousPatternMatch(lemma, sorted(chosen))
    parse = next(iter(chosen.values()))
    return SurfaceRoot(tuple(parse.radicals), tuple(parse.gemflags), tuple(parse.positions))


def apply_root_code(root: SurfaceRoot, code: RootCode) -> SurfaceRoot:
    """Map a singular surface root onto the plural surface root."""
    radicals: list[str] = []
    flags: list[bool] = []
    for tok in code.tokens:
        if tok[0] == "copy":
            k = tok[1]
            if k > len(root):
                raise IndexOutOfRange(f"root code {code} copies radical {k} of a {len(root)}-radical root")
            radicals.append(root.radicals[k - 1])
            flags.append(False)
        elif tok[0] == "lit":
            radicals.append(tok[1])
            flags.append(False)
        else:  # gemfinal
            flags[-1] = True
    return SurfaceRoot(tuple(radicals), tuple(flags))
