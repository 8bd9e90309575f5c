"""Persistence for scan results: a single human-diffable JSON file.

Entries are keyed by exponent in ascending order and never include the
elapsed timing, so re-running a scan reproduces the file byte for byte
apart from the created/updated timestamps.  Upserts are idempotent: an
exponent already present is left untouched.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .errors import DomainError
from .prover import ProofReport
from .residues import ResiduePair

FORMAT_VERSION = 1


def pairs_to_lists(pairs: tuple[ResiduePair, ...]) -> list[list[int]]:
    return [[p.delta_a, p.delta_b] for p in pairs]


def proof_report_to_dict(report: ProofReport, include_elapsed: bool = True) -> dict:
    d = {
        "n": report.n,
        "outcome": report.outcome,
        "pair_count": report.pair_count,
        "trinomial_zeros": pairs_to_lists(report.trinomial_zeros),
        "cofactor_zeros": pairs_to_lists(report.cofactor_zeros),
        "v2_witnesses": [list(w) for w in report.v2_witnesses],
        "caveats": list(report.caveats),
    }
    if include_elapsed:
        d["elapsed"] = report.elapsed
    return d


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class ScanAtlas:
    format_version: int = FORMAT_VERSION
    created: str | None = None
    updated: str | None = None
    entries: dict[int, dict] = field(default_factory=dict)

    @classmethod
    def load(cls, path: str | Path) -> "ScanAtlas":
        raw = json.loads(Path(path).read_text())
        version = raw.get("format_version")
        if version != FORMAT_VERSION:
            raise DomainError(
                f"unsupported atlas format_version {version!r}, expected {FORMAT_VERSION}"
            )
        return cls(
            format_version=version,
            created=raw.get("created"),
            updated=raw.get("updated"),
            entries={int(k): v for k, v in raw.get("entries", {}).items()},
        )

    def upsert(self, reports: list[ProofReport]) -> None:
        """Add reports for exponents not yet present; existing entries win."""
        for report in reports:
            self.entries.setdefault(
                report.n, proof_report_to_dict(report, include_elapsed=False)
            )

    def to_json(self) -> str:
        body = {
            "format_version": self.format_version,
            "created": self.created,
            "updated": self.updated,
            "entries": {str(n): self.entries[n] for n in sorted(self.entries)},
        }
        return json.dumps(body, indent=2) + "\n"

    def save(self, path: str | Path) -> None:
        now = _utc_now()
        if self.created is None:
            self.created = now
        self.updated = now
        Path(path).write_text(self.to_json())
