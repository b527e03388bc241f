"""Built-in worked examples with their expected properties.

Each catalog entry couples an edge-signed map (when one is encodable from
published data; entries known only from drawings carry ``map: null`` and
are skipped by the regression) with a tri-state property record:

* ``witness_color`` / ``witness_sign``: class of the realizing antipodal
  witness of the labeled medial.  For accepted (projective) entries this
  is the accepting witness; for rejected ones every witness must share
  the recorded class.
* ``alternating``: the edge signature is constant.
* ``self_dual`` / ``antipodally_self_dual`` / ``antipodally_symmetric``:
  properties of the underlying map itself.
* ``medial_antipodally_symmetric`` and ``projective``: outcome of the
  projectivity decision for the entry's presentation.

``null`` marks a field the source does not record; those are skipped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .links import EdgeSignedMap, is_alternating_signature
from .maps import map_from_dict, signs_from_dict
from .projective import check_projective
from .symmetry import (
    is_antipodally_self_dual,
    is_antipodally_symmetric,
    is_self_dual,
)

FIXTURE_DIR = Path(__file__).parent / "fixtures"

EXPECTED_FIELDS = (
    "witness_color",
    "witness_sign",
    "alternating",
    "self_dual",
    "antipodally_self_dual",
    "antipodally_symmetric",
    "medial_antipodally_symmetric",
    "projective",
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    signed_map: EdgeSignedMap | None
    expected: dict


def load_catalog(directory: Path | None = None) -> list[CatalogEntry]:
    """Load and validate every fixture, ordered by file name."""
    directory = FIXTURE_DIR if directory is None else Path(directory)
    entries = []
    for path in sorted(directory.glob("*.json")):
        data = json.loads(path.read_text())
        signed = None
        if data.get("map") is not None:
            m = map_from_dict(data["map"])
            signed = EdgeSignedMap(m, signs_from_dict(data["map"], m.n_edges))
        expected = {field: data["expected"].get(field) for field in EXPECTED_FIELDS}
        entries.append(
            CatalogEntry(
                name=data["name"],
                description=data.get("description", ""),
                signed_map=signed,
                expected=expected,
            )
        )
    return entries


def computed_properties(g: EdgeSignedMap) -> dict:
    """Evaluate every catalog property of an edge-signed map."""
    report = check_projective(g)
    if report.projective:
        cls = report.witnesses[report.accepting_witness][1]
        color, sign = cls.color, cls.sign
    else:
        classes = {(c.color, c.sign) for _, c in report.witnesses}
        if not classes:
            color = sign = None
        elif len(classes) == 1:
            color, sign = next(iter(classes))
        else:
            color = sign = "mixed"
    return {
        "witness_color": color,
        "witness_sign": sign,
        "alternating": is_alternating_signature(g),
        "self_dual": is_self_dual(g.map) is not None,
        "antipodally_self_dual": is_antipodally_self_dual(g.map) is not None,
        "antipodally_symmetric": is_antipodally_symmetric(g.map) is not None,
        "medial_antipodally_symmetric": report.medial_antipodal,
        "projective": report.projective,
    }


@dataclass(frozen=True)
class RegressionReport:
    entries: tuple[dict, ...]
    checked: int
    skipped: int
    failures: int

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json_dict(self) -> dict:
        return {
            "entries": list(self.entries),
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "ok": self.ok,
        }


def run_regression(entries: list[CatalogEntry]) -> RegressionReport:
    """Compare computed properties with every recorded expectation.

    Entries are processed independently and reported in name order, so
    the outcome does not depend on input order.
    """
    rows = []
    checked = skipped = failures = 0
    for entry in sorted(entries, key=lambda e: e.name):
        if entry.signed_map is None:
            skipped += 1
            rows.append({"name": entry.name, "status": "skipped_no_map", "fields": []})
            continue
        checked += 1
        computed = computed_properties(entry.signed_map)
        fields = []
        for field in EXPECTED_FIELDS:
            want = entry.expected.get(field)
            if want is None:
                fields.append({"field": field, "status": "unrecorded"})
                continue
            got = computed[field]
            ok = got == want
            failures += not ok
            fields.append(
                {
                    "field": field,
                    "status": "pass" if ok else "fail",
                    "expected": want,
                    "computed": got,
                }
            )
        rows.append({"name": entry.name, "status": "checked", "fields": fields})
    return RegressionReport(tuple(rows), checked, skipped, failures)
