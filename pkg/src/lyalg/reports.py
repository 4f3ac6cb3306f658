"""Pass/fail reports with equation witnesses."""

from dataclasses import dataclass, field

from .linalg import format_frac

DEFAULT_CAP = 10


@dataclass
class Violation:
    eq: str           # equation identifier, e.g. "LY3"
    args: tuple       # witness basis tuple (indices)
    residual: tuple   # left-minus-right value: vector, or matrix for operator equations

    def to_dict(self):
        return {"eq": self.eq, "args": list(self.args), "residual": _ser(self.residual)}


def _ser(x):
    if isinstance(x, tuple) and x and isinstance(x[0], tuple):
        return [[format_frac(v) for v in row] for row in x]
    return [format_frac(v) for v in x]


@dataclass
class Report:
    subject: str
    verdict: str = "pass"                 # "pass" | "fail"
    violations: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.verdict == "pass"

    def to_dict(self):
        return {
            "subject": self.subject,
            "verdict": self.verdict,
            "violations": [v.to_dict() for v in self.violations],
            "data": self.data,
        }

    def pretty(self):
        lines = ["%s: %s" % (self.subject, self.verdict.upper())]
        for v in self.violations:
            lines.append("  %s at %s: residual %s" % (v.eq, v.args, _ser(v.residual)))
        for k in sorted(self.data):
            lines.append("  %s: %s" % (k, self.data[k]))
        return "\n".join(lines)


class Checker:
    """Collects violations, capping the witness list unless asked not to."""

    def __init__(self, subject, all_violations=False, cap=DEFAULT_CAP):
        self.subject = subject
        self.all_violations = all_violations
        self.cap = cap
        self.violations = []
        self._saturated = False

    def record(self, eq, args, residual):
        if not self._saturated:
            self.violations.append(Violation(eq, tuple(args), residual))
            if not self.all_violations and len(self.violations) >= self.cap:
                self._saturated = True

    @property
    def done(self):
        """True once further scanning cannot change the report."""
        return self._saturated

    @property
    def failed(self):
        return bool(self.violations)

    def report(self, data=None):
        return Report(self.subject,
                      "fail" if self.violations else "pass",
                      self.violations,
                      dict(data or {}))
