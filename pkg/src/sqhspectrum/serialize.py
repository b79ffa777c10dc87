"""JSON and CSV output.  Everything here is deterministic for fixed input."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Optional

from .constructions import NamedDeformation
from .dsl import render_terms, render_vertices
from .oracle import SpectrumResult, VerificationReport
from .predictor import GapReport, to_intervals

SCHEMA_VERSION = "1"

SWEEP_HEADER = "p,q,mu,status,n_gaps_predicted,n_gaps_observed,runtime_ms"


def report_document(report: GapReport, spectrum: Optional[SpectrumResult] = None,
                    verification: Optional[VerificationReport] = None) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "params": report.params.as_dict(),
        "mu": report.mu,
        "mu_pkp": report.mu_pkp,
        "applicability": report.applicability,
        "guaranteed": [[lo, hi] for lo, hi in report.guaranteed],
        "possible_gaps": [
            {"value": g.value, "case": g.case, "definitive": g.definitive} for g in report.possible_gaps
        ],
        "witnesses": {},
    }
    if spectrum is not None:
        doc["attainable"] = [[lo, hi] for lo, hi in to_intervals(spectrum.attainable)]
        doc["witnesses"] = {str(nu): render_vertices(d) for nu, d in spectrum.witnesses.items()}
        doc["witness_terms"] = {str(nu): render_terms(d) for nu, d in spectrum.witnesses.items()}
        doc["constraints"] = {
            "min_total_degree": spectrum.constraints.min_total_degree,
            "min_nu": spectrum.constraints.min_nu,
            "require_convenient": spectrum.constraints.require_convenient,
        }
    if verification is not None:
        doc["status"] = verification.status
        doc["missing_guaranteed"] = sorted(verification.missing_guaranteed)
        doc["closed_gaps"] = sorted(verification.closed_gaps)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def deformation_document(items: Iterable[NamedDeformation]) -> list[dict]:
    return [
        {
            "label": it.label,
            "diagram": render_vertices(it.diagram),
            "terms": render_terms(it.diagram),
            "base": render_vertices(it.base),
            "nu": it.nu,
            "claimed_nu": it.claimed_nu,
        }
        for it in items
    ]


def sweep_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    fields = SWEEP_HEADER.split(",")
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: row[k] for k in fields})
    return buf.getvalue()
