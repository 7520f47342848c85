"""Text and file formats: the word grammar, JSON, GAP and Magma export.

The word grammar is the single canonical text form.  Tokens are separated
by whitespace or '.'; each token is ``fam[sub,sup]`` with the indices the
family carries (``d`` and ``del`` bare, ``x[i]``), a postfix apostrophe
for the inverse, and an optional ``^n`` power that expands to letter
repetition.  Example: ``f[1,2]' d f[1,2]``.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .presentations import Presentation, Relator, Variant
from .words import Symbol, Word, sym

_TOKEN = re.compile(r"[^\s.]+")
_LETTER = re.compile(
    r"(?P<fam>del|[abcdfgx])"
    r"(?:\[(?P<sub>\d+)(?:,(?P<sup>\d+))?\])?"
    r"(?P<inv>'?)"
    r"(?:\^(?P<pow>-?\d+))?$"
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"at position {position}: {message}")
        self.position = position


def parse_word(text: str) -> Word:
    letters = []
    for m in _TOKEN.finditer(text):
        token, pos = m.group(0), m.start()
        lm = _LETTER.match(token)
        if lm is None:
            raise ParseError(f"bad token {token!r}", pos)
        fam = lm.group("fam")
        sub = int(lm.group("sub")) if lm.group("sub") else None
        sup = int(lm.group("sup")) if lm.group("sup") else None
        try:
            s = sym(fam, sub, sup)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from exc
        exp = -1 if lm.group("inv") else 1
        power = int(lm.group("pow")) if lm.group("pow") else 1
        if power < 0:
            exp, power = -exp, -power
        letters.extend([(s, exp)] * power)
    return Word(letters)


def format_word(w: Word) -> str:
    return str(w)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def _symbol_record(s: Symbol) -> dict[str, Any]:
    return {"fam": s.family, "sub": s.sub, "sup": s.sup}


def _symbol_from_record(rec: dict[str, Any]) -> Symbol:
    return sym(rec["fam"], rec.get("sub"), rec.get("sup"))


def _word_records(w: Word) -> list[dict[str, Any]]:
    return [{"fam": s.family, "sub": s.sub, "sup": s.sup, "exp": e} for s, e in w]


def _word_from_records(recs: list[dict[str, Any]]) -> Word:
    return Word([(_symbol_from_record(rec), rec["exp"]) for rec in recs])


def presentation_to_json(p: Presentation) -> str:
    doc = {
        "variant": p.variant.value,
        "rank": p.rank,
        "generators": [_symbol_record(s) for s in p.generators],
        "relators": [
            {"word": _word_records(rel.word), "provenance": rel.provenance}
            for rel in p.relators
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def presentation_from_json(text: str) -> Presentation:
    doc = json.loads(text)
    return Presentation(
        variant=Variant(doc["variant"]),
        rank=doc["rank"],
        generators=tuple(_symbol_from_record(rec) for rec in doc["generators"]),
        relators=tuple(
            Relator(_word_from_records(rec["word"]), rec["provenance"])
            for rec in doc["relators"]
        ),
    )


# ---------------------------------------------------------------------------
# Text / CAS formats
# ---------------------------------------------------------------------------


def presentation_title(p: Presentation) -> str:
    prefix = {
        Variant.PRODUCT_FULL: "G",
        Variant.SURFACE_LAST: "S",
    }.get(p.variant, "K")
    return f"{prefix}_{p.rank}"


def presentation_to_text(p: Presentation) -> str:
    lines = [
        f"{presentation_title(p)}  (variant {p.variant.value}, rank {p.rank})",
        f"generators ({len(p.generators)}): " + " ".join(str(s) for s in p.generators),
        f"relators ({len(p.relators)}):",
    ]
    width = len(str(len(p.relators) - 1))
    for n, rel in enumerate(p.relators):
        lines.append(f"  [{n:>{width}}] {rel.provenance}: {rel.word}")
    return "\n".join(lines) + "\n"


def flat_name(s: Symbol) -> str:
    return f"{s.family}{s.sub or ''}{s.sup or ''}"


def _syllables(w: Word) -> list[tuple[Symbol, int]]:
    out: list[tuple[Symbol, int]] = []
    for s, e in w:
        if out and out[-1][0] == s and (out[-1][1] > 0) == (e > 0):
            out[-1] = (s, out[-1][1] + e)
        else:
            out.append((s, e))
    return out


def _cas_word(w: Word) -> str:
    parts = []
    for s, e in _syllables(w):
        name = flat_name(s)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _legend(p: Presentation, comment: str) -> list[str]:
    return [
        f"{comment} generator legend: "
        + ", ".join(f"{flat_name(s)} = {s}" for s in p.generators)
    ]


def presentation_to_gap(p: Presentation) -> str:
    names = [flat_name(s) for s in p.generators]
    lines = [f"# {presentation_title(p)} (variant {p.variant.value}, rank {p.rank})"]
    lines += _legend(p, "#")
    quoted = ", ".join(f'"{n}"' for n in names)
    lines.append(f"F := FreeGroup({quoted});;")
    for idx, n in enumerate(names, start=1):
        lines.append(f"{n} := F.{idx};;")
    lines.append("rels := [")
    for rel in p.relators:
        lines.append(f"  {_cas_word(rel.word)},  # {rel.provenance}")
    lines.append("];;")
    lines.append("G := F / rels;;")
    return "\n".join(lines) + "\n"


def presentation_to_magma(p: Presentation) -> str:
    names = [flat_name(s) for s in p.generators]
    lines = [f"// {presentation_title(p)} (variant {p.variant.value}, rank {p.rank})"]
    lines += _legend(p, "//")
    lines.append(f"G<{', '.join(names)}> := Group<")
    lines.append("  " + ", ".join(names) + " |")
    body = ",\n".join(f"  {_cas_word(rel.word)}" for rel in p.relators)
    lines.append(body)
    lines.append(">;")
    return "\n".join(lines) + "\n"


FORMATTERS = {
    "text": presentation_to_text,
    "json": presentation_to_json,
    "gap": presentation_to_gap,
    "magma": presentation_to_magma,
}


# ---------------------------------------------------------------------------
# Tietze scripts
# ---------------------------------------------------------------------------


def script_to_json(script) -> str:
    from . import tietze

    def cert_records(cert):
        if cert is None:
            return None
        return [
            {"relator": st.relator_index, "conjugator": _word_records(st.conjugator),
             "sign": st.sign}
            for st in cert
        ]

    moves = []
    for move in script.moves:
        if isinstance(move, tietze.AddRelator):
            moves.append({"move": "add-relator", "word": _word_records(move.word),
                          "provenance": move.provenance,
                          "certificate": cert_records(move.certificate)})
        elif isinstance(move, tietze.RemoveRelator):
            moves.append({"move": "remove-relator", "index": move.index,
                          "certificate": cert_records(move.certificate)})
        elif isinstance(move, tietze.AddGenerator):
            moves.append({"move": "add-generator", "symbol": _symbol_record(move.symbol),
                          "defining": _word_records(move.defining)})
        elif isinstance(move, tietze.RemoveGenerator):
            moves.append({"move": "remove-generator", "symbol": _symbol_record(move.symbol)})
        else:
            raise TypeError(f"unknown move {move!r}")
    doc = {
        "start_variant": script.start_variant.value,
        "rank": script.rank,
        "moves": moves,
        "expect_variant": script.expect_variant.value if script.expect_variant else None,
    }
    return json.dumps(doc, indent=2) + "\n"


def script_from_json(text: str):
    from . import tietze

    def cert_from(recs):
        if recs is None:
            return None
        return tuple(
            tietze.CertStep(rec["relator"], _word_from_records(rec["conjugator"]), rec["sign"])
            for rec in recs
        )

    doc = json.loads(text)
    moves = []
    for rec in doc["moves"]:
        kind = rec["move"]
        if kind == "add-relator":
            moves.append(tietze.AddRelator(_word_from_records(rec["word"]),
                                           rec.get("provenance", "added"),
                                           cert_from(rec.get("certificate"))))
        elif kind == "remove-relator":
            moves.append(tietze.RemoveRelator(rec["index"], cert_from(rec.get("certificate"))))
        elif kind == "add-generator":
            moves.append(tietze.AddGenerator(_symbol_from_record(rec["symbol"]),
                                             _word_from_records(rec["defining"])))
        elif kind == "remove-generator":
            moves.append(tietze.RemoveGenerator(_symbol_from_record(rec["symbol"])))
        else:
            raise ValueError(f"unknown move kind {kind!r}")
    expect = doc.get("expect_variant")
    return tietze.TietzeScript(
        Variant(doc["start_variant"]), doc["rank"], tuple(moves),
        Variant(expect) if expect else None,
    )
