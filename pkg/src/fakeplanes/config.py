"""Plane config files and axiom files.

Plane config (key = value, optional ``[curves]`` section)::

    id = myplane
    h1_orders = 2, 4
    aut = other
    canonical_torsion = 0, 0

    [curves]
    1, 0 = effective=true h0_OC2C=1 h1_OC2C=unknown

Axiom file, one entry per line, ``#`` starts the citation::

    A-kra = false
    A-noL1 = true
    h0(1; 0,1) = 0          # my source
    h0(2; 1,0) = [0, 1]
"""

from __future__ import annotations

import configparser
import re
from pathlib import Path

from . import axioms as ax
from .cohomology import DimInterval, Fact
from .derivation import Axiom
from .picard import FakePlane, TorsionGroup, line_bundle
from .reider import CurveFacts

_FACT_RE = re.compile(r"^h([012])\(\s*(-?\d+)\s*(?:;\s*([\d,\s]*))?\)$")
_TRUE = {"true", "yes", "1", "on"}
_FALSE = {"false", "no", "0", "off"}


class ConfigError(ValueError):
    pass


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in re.split(r"[,\s]+", text) if x)
    except ValueError:
        raise ConfigError(f"expected integers, got {text!r}") from None


def _interval(text: str) -> DimInterval:
    text = text.strip()
    if text in ("unknown", "?", ""):
        return DimInterval()
    if text.startswith("["):
        lo, hi = (p.strip() for p in text.strip("[]").split(","))
        return DimInterval(int(lo), None if hi in ("inf", "") else int(hi))
    return DimInterval.exactly(int(text))


def parse_plane_config(text: str) -> tuple[FakePlane, dict]:
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",))
    cp.optionxform = str
    try:
        cp.read_string("[plane]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from None
    sec = cp["plane"]
    if "id" not in sec or "h1_orders" not in sec:
        raise ConfigError("plane config needs 'id' and 'h1_orders'")
    group = TorsionGroup(_ints(sec["h1_orders"]))
    aut = sec.get("aut", "other").strip()
    coords = _ints(sec.get("canonical_torsion", "")) or None
    K = line_bundle(group, 3, coords)
    plane = FakePlane(sec["id"].strip(), group, aut, K)
    curves = {}
    if cp.has_section("curves"):
        for key, value in cp["curves"].items():
            tc = group.element(_ints(key)).coords
            fields = dict(tok.split("=", 1) for tok in value.split() if "=" in tok)
            eff = fields.get("effective", "unknown").lower()
            curves[tc] = CurveFacts(
                True if eff in _TRUE else False if eff in _FALSE else None,
                _interval(fields.get("h0_OC2C", "unknown")),
                _interval(fields.get("h1_OC2C", "unknown")),
            )
    return plane, curves


def load_plane_config(path) -> tuple[FakePlane, dict]:
    return parse_plane_config(Path(path).read_text())


def parse_axiom_file(text: str, plane: FakePlane):
    """Returns ``(toggles, facts)``: registry axioms switched on/off, and user facts."""
    toggles: dict[str, bool] = {}
    facts: list[Axiom] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, citation = raw.partition("#")
        line = line.strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}: expected 'id = value'")
        key, value = key.strip(), value.strip()
        if key in ax.REGISTRY:
            v = value.lower()
            if v not in _TRUE | _FALSE:
                raise ConfigError(f"line {lineno}: {key} takes true/false")
            toggles[key] = v in _TRUE
            continue
        m = _FACT_RE.match(key.replace(" ", ""))
        if not m:
            raise ConfigError(f"line {lineno}: unknown axiom id {key!r}")
        index, degree, coords = int(m.group(1)), int(m.group(2)), _ints(m.group(3) or "")
        cls = line_bundle(plane.torsion, degree, coords or None)
        facts.append(Axiom(f"user:{key.replace(' ', '')}", Fact(cls, index, _interval(value)),
                           citation.strip() or "user axiom file"))
    return toggles, facts
