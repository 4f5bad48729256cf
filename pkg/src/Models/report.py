from enum import Enum
from typing import Any, Dict, List, Optional


class CheckStatus(Enum):
    """Outcome of a single verified identity."""
    PASS = "pass"
    FAIL = "fail"


class CheckResult:
    """
    One verified identity together with its residual.

    The residual is stored already rendered (polynomial text, tensor text or
    a JSON-ready list) so reports serialize deterministically.
    """

    def __init__(self, identity: str, status: CheckStatus, residual: Any = "0"):
        """
        Initialize a CheckResult.

        Args:
            identity: Human-readable statement of the identity
            status: CheckStatus.PASS or CheckStatus.FAIL
            residual: Rendered residual; "0" when the identity holds
        """
        self.identity = identity
        self.status = status
        self.residual = residual

    @classmethod
    def from_residual(cls, identity: str, residual: Any) -> "CheckResult":
        """Build a result from an unrendered residual: zero means pass."""
        if residual:
            return cls(identity, CheckStatus.FAIL, str(residual))
        return cls(identity, CheckStatus.PASS, "0")

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckResult":
        return cls(
            identity=data["identity"],
            status=CheckStatus(data["status"]),
            residual=data.get("residual", "0"),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"identity": self.identity, "status": self.status.value, "residual": self.residual}

    def __repr__(self) -> str:
        return f"CheckResult({self.identity!r}, {self.status.value})"


class CheckReport:
    """
    A named list of CheckResults; the report passes when every result does.
    """

    def __init__(self, title: str, results: Optional[List[CheckResult]] = None, details: Optional[Dict[str, Any]] = None):
        """
        Initialize a CheckReport.

        Args:
            title: What was verified, e.g. "hopf n=2"
            results: Individual identity checks
            details: Extra JSON-ready information (tables, parameters)
        """
        self.title = title
        self.results = list(results or [])
        self.details = dict(details or {})

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    def extend(self, other: "CheckReport") -> None:
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckReport":
        return cls(
            title=data["title"],
            results=[CheckResult.from_dict(entry) for entry in data.get("results", [])],
            details=data.get("details"),
        )

    def to_dict(self) -> Dict[str, Any]:
        result = {
            "title": self.title,
            "passed": self.passed,
            "results": [entry.to_dict() for entry in self.results],
        }
        # Details only when present
        if self.details:
            result["details"] = self.details
        return result

    def __repr__(self) -> str:
        return f"CheckReport({self.title!r}, {len(self.results)} results, passed={self.passed})"
