"""Embedded reference tables, verification, and serialization.

The corpus in ``corpus_data`` lists, for every 2-bridge link through ten
crossings, the boundary-slope families as printed: one (X + Y/t, Y*t + Z)
family per intersection form (valid for 1 < t < oo) and one
(x + y*s, x - y*s) family per s family.  ``verify_corpus`` recomputes
everything from scratch and diffs.  ``emit`` serializes computed results
as text, JSON, CSV or TeX with a fixed canonical ordering, so identical
inputs always produce identical bytes.
"""

from __future__ import annotations

import io
import json
import re
from typing import Iterable, NamedTuple, Sequence

from .arith import (TwoBridgeLink, canonical_rep, crossing_number, make_link,
                    rolfsen_name)
from .corpus_data import CORPUS
from .slopes import LinkSlopes, SlopeFamily, slope_families

FamilyKey = tuple  # ('T', X, Y, Z) or ('S', x, y)


# -- family notation ------------------------------------------------------

def _coord(const: int, coef: int, sym: str) -> str:
    """Render const + coef*sym, constant first, unit coefficients bare."""
    parts = []
    if const != 0:
        parts.append(str(const))
    if coef != 0:
        mag = "" if abs(coef) == 1 else str(abs(coef))
        term = f"{mag}{sym}"
        if not parts:
            parts.append(term if coef > 0 else f"-{term}")
        else:
            parts.append(f"+{term}" if coef > 0 else f"-{term}")
    if not parts:
        return "0"
    return "".join(parts)


def render_key(key: FamilyKey) -> str:
    """Canonical text for a presentation family."""
    if key[0] == "T":
        _, x, y, z = key
        return f"({_coord(x, y, 't^-1')},{_coord(z, y, 't')})"
    if key[0] == "S":
        _, x, y = key
        return f"({_coord(x, y, 's')},{_coord(x, -y, 's')})"
    raise ValueError(f"cannot render {key!r}")


def render_family(fam: SlopeFamily) -> tuple[str, str]:
    """The two slope coordinates of a family, as text."""
    if fam.branch == "T":
        x, y, z = fam.coeffs
        return (_coord(x, y, "t^-1"), _coord(z, y, "t"))
    if fam.branch == "S":
        x, y = fam.coeffs
        return (_coord(x, y, "s"), _coord(x, -y, "s"))
    if fam.branch == "endpoint":
        (x,) = fam.coeffs
        return ("phi", str(x)) if fam.phi == "first" else (str(x), "phi")
    raise ValueError(f"cannot render {fam!r}")


_TERM = re.compile(r"([+-]?)(\d*)(u|t|s)?$")


def _parse_coord(text: str) -> tuple[int, int, int, int]:
    """(constant, t^-1 coefficient, t coefficient, s coefficient)."""
    const = tinv = tcoef = scoef = 0
    # Substitute the inverse-t symbol first: its minus sign must not
    # split a term.
    body = text.replace(" ", "").replace("t^-1", "u")
    for piece in re.findall(r"[+-]?[^+-]+", body):
        m = _TERM.match(piece)
        if not m:
            raise ValueError(f"cannot parse slope term {piece!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        val = sign * mag
        sym = m.group(3)
        if sym is None:
            if not m.group(2):
                raise ValueError(f"empty term in {text!r}")
            const += val
        elif sym == "u":
            tinv += val
        elif sym == "t":
            tcoef += val
        else:
            scoef += val
    return const, tinv, tcoef, scoef


def parse_family(text: str) -> FamilyKey:
    """Parse a slope-pair string into a presentation family key."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"family must be parenthesized: {text!r}")
    # The comma splitting the pair is never inside a term.
    left, right = body[1:-1].split(",")
    c1, tinv1, t1, s1 = _parse_coord(left)
    c2, tinv2, t2, s2 = _parse_coord(right)
    if s1 or s2:
        if tinv1 or t1 or tinv2 or t2 or c1 != c2 or s2 != -s1 or s1 <= 0:
            raise ValueError(f"malformed s family {text!r}")
        return ("S", c1, s1)
    if t1 or tinv2:
        raise ValueError(f"malformed t family {text!r}")
    if tinv1 != t2:
        raise ValueError(f"t coefficients disagree in {text!r}")
    return ("T", c1, tinv1, c2)


# -- corpus ---------------------------------------------------------------

class CorpusRow(NamedTuple):
    crossings: int
    name: str | None
    link: TwoBridgeLink
    families: frozenset


def load_corpus() -> list[CorpusRow]:
    rows = []
    for crossings, name, p, q, fams in CORPUS:
        rows.append(CorpusRow(crossings, name, TwoBridgeLink(p, q),
                              frozenset(parse_family(f) for f in fams)))
    return rows


def corpus_text(families: Iterable[FamilyKey]) -> str:
    """Canonical one-line corpus serialization of a family set."""
    keys = sorted(families, key=lambda k: (k[0] != "T", k[1:]))
    return " ".join(render_key(k) for k in keys)


class TableReport(NamedTuple):
    """Outcome of checking computed slopes against the corpus."""

    entries: tuple  # (link, status, missing, extra) per corpus row
    matched: int
    total: int

    @property
    def ok(self) -> bool:
        return self.matched == self.total

    def summary(self) -> str:
        return f"{self.matched}/{self.total} match"


def verify_corpus(max_crossings: int = 10) -> TableReport:
    """Recompute every corpus link up to the bound and diff the
    presentation families against the stored rows."""
    entries = []
    matched = 0
    for row in load_corpus():
        if row.crossings > max_crossings:
            continue
        computed = slope_families(row.link).presentation()
        if computed == row.families:
            entries.append((row.link, "match", frozenset(), frozenset()))
            matched += 1
        else:
            entries.append((row.link, "mismatch",
                            row.families - computed, computed - row.families))
    return TableReport(tuple(entries), matched, len(entries))


def family_table_for_surgery_family(k: int) -> LinkSlopes:
    """Slope families of the link (4k-1)/(8k), the 1/k surgery on one
    component of the Borromean rings, in merged presentation."""
    if k < 1:
        raise ValueError("k must be positive")
    return slope_families(make_link(4 * k - 1, 8 * k))


# -- serialization --------------------------------------------------------

def _family_json(fam: SlopeFamily) -> dict:
    return {
        "branch": fam.branch,
        "coeffs": list(fam.coeffs),
        "domain": list(fam.domain),
        "phi": fam.phi,
    }


def _emit_json(results: Sequence[LinkSlopes]) -> str:
    payload = []
    for r in results:
        payload.append({
            "p": r.link.p,
            "q": r.link.q,
            "rolfsen": rolfsen_name(r.link),
            "linking_number": r.linking_number,
            "families": [_family_json(f) for f in r.families],
        })
    return json.dumps(payload, indent=2) + "\n"


def _emit_csv(results: Sequence[LinkSlopes]) -> str:
    out = io.StringIO()
    out.write("p,q,branch,X,Y,Z,domain_lo,domain_hi,phi\n")
    for r in results:
        for fam in r.families:
            coeffs = list(fam.coeffs) + ["_"] * (3 - len(fam.coeffs))
            row = [r.link.p, r.link.q, fam.branch, *coeffs,
                   fam.domain[0], fam.domain[1], fam.phi]
            out.write(",".join(str(v) for v in row) + "\n")
    return out.getvalue()


def _emit_text(results: Sequence[LinkSlopes]) -> str:
    lines = []
    for r in results:
        pairs = ["(%s, %s)" % render_family(f) for f in r.families]
        body = "; ".join(pairs)
        if len(results) == 1:
            lines.append(body)
        else:
            name = rolfsen_name(r.link)
            label = f"{r.link}" + (f" ({name})" if name else "")
            lines.append(f"{label}: {body}")
    return "\n".join(lines) + "\n"


def _tex_coord(text: str) -> str:
    return text.replace("t^-1", "t^{-1}")


def _emit_tex(results: Sequence[LinkSlopes]) -> str:
    """Tabular layout in the style of the printed tables: four families
    per line, one block per link, names where they exist."""
    named = any(rolfsen_name(r.link) for r in results)
    cols = "|c|r|llll|" if named else "|r|llll|"
    head = ("\\mbox{link}&p/q&\\mbox{boundary slopes}&&&"
            if named else "p/q&\\mbox{boundary slopes}&&&")
    lines = [f"\\begin{{array}}{{{cols}}}", "\\hline", head + "\\\\",
             "\\hline", "\\hline"]
    for r in results:
        keys = sorted(r.presentation(), key=lambda k: (k[0] != "T", k[1:]))
        cells = ["(%s,%s)" % tuple(_tex_coord(c) for c in
                                   render_key(k)[1:-1].split(","))
                 for k in keys]
        prefix = ([rolfsen_name(r.link) or "", str(r.link)]
                  if named else [str(r.link)])
        first = True
        while cells or first:
            group, cells = cells[:4], cells[4:]
            group += [""] * (4 - len(group))
            row = (prefix if first else [""] * len(prefix)) + group
            lines.append("&".join(row) + "\\\\")
            first = False
        lines.append("\\hline")
    lines.append("\\end{array}")
    return "\n".join(lines) + "\n"


_EMITTERS = {"json": _emit_json, "csv": _emit_csv,
             "text": _emit_text, "tex": _emit_tex}


def emit(results: Sequence[LinkSlopes], fmt: str) -> bytes:
    """Deterministic serialization of computed slope data."""
    if fmt not in _EMITTERS:
        raise ValueError(f"unknown format {fmt!r}")
    return _EMITTERS[fmt](results).encode()
