"""Check reports and their stable line-oriented wire format."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64


@dataclass
class CheckEntry:
    name: str
    status: str
    witness: object = None  # residual polynomial or message on non-pass
    seconds: float = 0.0


@dataclass
class VerificationReport:
    matrix_id: str
    entries: list = field(default_factory=list)

    def add(self, name, status, witness=None, seconds=0.0):
        self.entries.append(CheckEntry(name, status, witness, seconds))

    def counts(self):
        c = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for e in self.entries:
            c[e.status] += 1
        return c

    def all_pass(self):
        return all(e.status == PASS for e in self.entries)

    def exit_code(self):
        c = self.counts()
        if c[FAIL]:
            return EXIT_FAIL
        if c[INCONCLUSIVE]:
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    def merged(self, other):
        out = VerificationReport(self.matrix_id, list(self.entries))
        out.entries.extend(other.entries)
        return out


def emit_report(report: VerificationReport, format="text") -> str:
    """Deterministic rendering; checks sorted by name.

    text: `CHECK <name> <PASS|FAIL|INCONCLUSIVE>` lines and a SUMMARY line.
    kv:   `check=<name> status=<...> ms=<int>` lines and a summary line.
    """
    entries = sorted(report.entries, key=lambda e: e.name)
    c = report.counts()
    total = len(entries)
    lines = []
    if format == "text":
        for e in entries:
            lines.append(f"CHECK {e.name} {e.status.upper()}")
        lines.append(
            f"SUMMARY total={total} pass={c[PASS]} fail={c[FAIL]} "
            f"inconclusive={c[INCONCLUSIVE]}"
        )
    elif format == "kv":
        for e in entries:
            lines.append(
                f"check={e.name} status={e.status} ms={int(e.seconds * 1000)}"
            )
        lines.append(
            f"summary total={total} pass={c[PASS]} fail={c[FAIL]} "
            f"inconclusive={c[INCONCLUSIVE]}"
        )
    else:
        raise ValueError(f"unknown report format {format!r}")
    return "\n".join(lines)
