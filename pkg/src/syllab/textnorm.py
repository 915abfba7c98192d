"""Sentence text to dictionary-ready word tokens.

Whitespace units keep their punctuation in leading/trailing fields so the
original line can be reconstructed; normalization then expands acronyms
letter by letter, verbalizes integer numerals, splits hyphenated words and
drops punctuation-only tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .errors import UnsupportedNumeralError

# apostrophes stay inside the core: clitics like "don't" are dictionary entries
_KEEP = {"'", "’"}

_NUMERAL = re.compile(r"^[0-9]+(?:[.,][0-9]+)*$")
_ORDINAL = re.compile(r"^[0-9]+(?:st|nd|rd|th)$", re.IGNORECASE)
_GROUPED_INT = re.compile(r"^[0-9]{1,3}(?:,[0-9]{3})+$")

MAX_NUMERAL = 999_999_999
NUMERAL_LANGUAGES = ("en", "fr", "es")


@dataclass(frozen=True)
class Token:
    raw: str
    core: str  # case-folded lookup key
    leading: str = ""
    trailing: str = ""
    kind: str = "word"  # word | acronym | numeral | punctuation-only
    flags: frozenset[str] = frozenset()

    @property
    def core_as_written(self) -> str:
        return self.raw[len(self.leading):len(self.raw) - len(self.trailing)]


def _classify(core_w: str) -> str:
    if not core_w or not any(ch.isalnum() for ch in core_w):
        return "punctuation-only"
    if len(core_w) >= 2 and core_w.isalpha() and core_w.isupper():
        return "acronym"
    if _NUMERAL.match(core_w):
        return "numeral"
    return "word"


def _edge_span(raw: str) -> tuple[int, int]:
    start, end = 0, len(raw)
    while start < end and not raw[start].isalnum() and raw[start] not in _KEEP:
        start += 1
    while end > start and not raw[end - 1].isalnum() and raw[end - 1] not in _KEEP:
        end -= 1
    return start, end


def tokenize(text: str, lang: str = "en") -> list[Token]:
    """Split on whitespace and peel punctuation off both ends of each unit."""
    tokens = []
    for raw in text.split():
        start, end = _edge_span(raw)
        core_w = raw[start:end]
        tokens.append(Token(
            raw=raw,
            core=core_w.lower(),
            leading=raw[:start],
            trailing=raw[end:],
            kind=_classify(core_w),
        ))
    return tokens


def expand_acronym(token: Token) -> list[Token]:
    """One single-letter word token per capital of the acronym."""
    if token.kind != "acronym":
        raise ValueError(f"not an acronym token: {token.raw!r}")
    return [Token(raw=ch, core=ch.lower()) for ch in token.core_as_written]


# --- cardinal number verbalization ------------------------------------------

_EN_ONES = ["zero", "one", "two", "three", "four", "five", "six", "seven",
            "eight", "nine", "ten", "eleven", "twelve", "thirteen", "fourteen",
            "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"]
_EN_TENS = [None, None, "twenty", "thirty", "forty", "fifty", "sixty",
            "seventy", "eighty", "ninety"]


def _en_words(n: int) -> list[str]:
    if n < 20:
        return [_EN_ONES[n]]
    if n < 100:
        tens, unit = divmod(n, 10)
        return [_EN_TENS[tens]] + ([_EN_ONES[unit]] if unit else [])
    for value, name in ((1_000_000, "million"), (1_000, "thousand"), (100, "hundred")):
        if n >= value:
            head, rest = divmod(n, value)
            return _en_words(head) + [name] + (_en_words(rest) if rest else [])
    raise AssertionError(n)


_FR_SMALL = ["zéro", "un", "deux", "trois", "quatre", "cinq", "six", "sept",
             "huit", "neuf", "dix", "onze", "douze", "treize", "quatorze",
             "quinze", "seize"]
_FR_TENS = {2: "vingt", 3: "trente", 4: "quarante", 5: "cinquante", 6: "soixante"}


def _fr_under100(n: int) -> list[str]:
    if n <= 16:
        return [_FR_SMALL[n]]
    if n < 20:
        return ["dix", _FR_SMALL[n - 10]]
    if n < 70:
        tens, unit = divmod(n, 10)
        if unit == 0:
            return [_FR_TENS[tens]]
        if unit == 1:
            return [_FR_TENS[tens], "et", "un"]
        return [_FR_TENS[tens]] + _fr_under100(unit)
    if n < 80:
        if n == 71:
            return ["soixante", "et", "onze"]
        return ["soixante"] + _fr_under100(n - 60)
    if n == 80:
        return ["quatre", "vingts"]
    return ["quatre", "vingt"] + _fr_under100(n - 80)


def _fr_under1000(n: int) -> list[str]:
    hundreds, rest = divmod(n, 100)
    parts: list[str] = []
    if hundreds == 1:
        parts = ["cent"]
    elif hundreds > 1:
        # "cents" keeps its plural s only when nothing follows inside the group
        parts = [_FR_SMALL[hundreds], "cents" if rest == 0 else "cent"]
    if rest or not parts:
        parts += _fr_under100(rest)
    return parts


def _fr_depluralize(tokens: list[str]) -> list[str]:
    # vingt/cent lose their plural s before the numeral "mille"
    if tokens and tokens[-1] in ("vingts", "cents"):
        return tokens[:-1] + [tokens[-1][:-1]]
    return tokens


def _fr_words(n: int) -> list[str]:
    if n == 0:
        return ["zéro"]
    parts: list[str] = []
    millions, rest = divmod(n, 1_000_000)
    thousands, units = divmod(rest, 1_000)
    if millions:
        if millions == 1:
            parts += ["un", "million"]
        else:
            parts += _fr_under1000(millions) + ["millions"]
    if thousands:
        if thousands == 1:
            parts += ["mille"]
        else:
            parts += _fr_depluralize(_fr_under1000(thousands)) + ["mille"]
    if units:
        parts += _fr_under1000(units)
    return parts


_ES_SMALL = ["cero", "uno", "dos", "tres", "cuatro", "cinco", "seis", "siete",
             "ocho", "nueve", "diez", "once", "doce", "trece", "catorce",
             "quince", "dieciséis", "diecisiete", "dieciocho", "diecinueve"]
_ES_TWENTIES = ["veinte", "veintiuno", "veintidós", "veintitrés",
                "veinticuatro", "veinticinco", "veintiséis", "veintisiete",
                "veintiocho", "veintinueve"]
_ES_TENS = {3: "treinta", 4: "cuarenta", 5: "cincuenta", 6: "sesenta",
            7: "setenta", 8: "ochenta", 9: "noventa"}
_ES_HUNDREDS = {1: "ciento", 2: "doscientos", 3: "trescientos",
                4: "cuatrocientos", 5: "quinientos", 6: "seiscientos",
                7: "setecientos", 8: "ochocientos", 9: "novecientos"}


def _es_under100(n: int) -> list[str]:
    if n < 20:
        return [_ES_SMALL[n]]
    if n < 30:
        return [_ES_TWENTIES[n - 20]]
    tens, unit = divmod(n, 10)
    if unit:
        return [_ES_TENS[tens], "y", _ES_SMALL[unit]]
    return [_ES_TENS[tens]]


def _es_under1000(n: int) -> list[str]:
    if n == 100:
        return ["cien"]
    hundreds, rest = divmod(n, 100)
    parts = [_ES_HUNDREDS[hundreds]] if hundreds else []
    if rest or not parts:
        parts += _es_under100(rest)
    return parts


def _es_apocope(tokens: list[str]) -> list[str]:
    # "uno" shortens before mil/millones: veintiún mil, treinta y un millones
    if tokens and tokens[-1] == "uno":
        return tokens[:-1] + ["un"]
    if tokens and tokens[-1] == "veintiuno":
        return tokens[:-1] + ["veintiún"]
    return tokens


def _es_words(n: int) -> list[str]:
    if n == 0:
        return ["cero"]
    parts: list[str] = []
    millions, rest = divmod(n, 1_000_000)
    thousands, units = divmod(rest, 1_000)
    if millions:
        if millions == 1:
            parts += ["un", "millón"]
        else:
            parts += _es_apocope(_es_under1000(millions)) + ["millones"]
    if thousands:
        if thousands == 1:
            parts += ["mil"]
        else:
            parts += _es_apocope(_es_under1000(thousands)) + ["mil"]
    if units:
        parts += _es_under1000(units)
    return parts


_NUM_RULES = {"en": _en_words, "fr": _fr_words, "es": _es_words}


def num_to_words(value: int, lang: str = "en") -> list[str]:
    """Cardinal reading of a non-negative integer as lowercase word tokens."""
    if lang not in _NUM_RULES:
        raise UnsupportedNumeralError(f"no numeral rules for language {lang!r}")
    if not isinstance(value, int) or isinstance(value, bool):
        raise UnsupportedNumeralError(f"not an integer: {value!r}")
    if not 0 <= value <= MAX_NUMERAL:
        raise UnsupportedNumeralError(f"value out of range [0, {MAX_NUMERAL}]: {value}")
    return _NUM_RULES[lang](value)


def _numeral_value(core: str) -> int:
    # commas are accepted only as strict thousands grouping; "3,5" and "3.5"
    # are decimals, which stay unexpanded with a review flag
    if core.isdigit():
        return int(core)
    if _GROUPED_INT.match(core):
        return int(core.replace(",", ""))
    raise UnsupportedNumeralError(f"unsupported numeral shape: {core!r}")


def normalize(text: str, lang: str = "en") -> list[Token]:
    """Tokenize, then expand acronyms/numerals, split hyphens, drop punctuation."""
    out: list[Token] = []
    for tok in tokenize(text, lang):
        if tok.kind == "punctuation-only":
            continue
        if "|" in tok.core or "\t" in tok.core:
            continue  # separator characters are reserved by the output format
        if tok.kind == "acronym":
            out.extend(expand_acronym(tok))
        elif tok.kind == "numeral":
            try:
                words = num_to_words(_numeral_value(tok.core), lang)
            except UnsupportedNumeralError:
                out.append(replace(tok, flags=tok.flags | {"numeral-unsupported"}))
            else:
                out.extend(Token(raw=w, core=w) for w in words)
        elif _ORDINAL.match(tok.core):
            # ordinals ("2nd") are digit-led words we cannot verbalize yet
            out.append(replace(tok, flags=tok.flags | {"numeral-unsupported"}))
        else:
            for part in tok.core.split("-"):
                start, end = _edge_span(part)
                part = part[start:end]
                if part and any(ch.isalnum() for ch in part):
                    out.append(replace(tok, core=part) if part == tok.core
                               else Token(raw=part, core=part))
    return out
