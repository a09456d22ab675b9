"""Machine-readable certificates of checked claims.

A certificate records the command, its inputs, every claim with the value
it was expected to have and the value actually computed, and supporting
witnesses. The claims block is serialized with sorted keys and hashed, so
two runs on the same inputs agree byte for byte on it; wall time and
memory are kept outside the hashed block.
"""

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Union

from hypercert import __version__
from hypercert.errors import FormatError
from hypercert.formats import read_json, write_json
from hypercert.logging import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = 1


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    FINDING = "FINDING"


def plain(value: Any) -> Any:
    """The JSON image of ``value``: tuples become lists, keys become strings."""
    return json.loads(json.dumps(value, sort_keys=True))


@dataclass(frozen=True)
class Claim:
    """One checked statement.

    ``FINDING`` marks a statement of the written argument that the
    computation does not confirm, as opposed to ``FAIL``, which marks a
    broken step of the proof pipeline itself.
    """

    name: str
    expected: Any
    computed: Any
    status: Status

    @classmethod
    def compare(
        cls, name: str, expected: Any, computed: Any, finding: bool = False
    ) -> "Claim":
        expected, computed = plain(expected), plain(computed)
        if expected == computed:
            status = Status.PASS
        else:
            status = Status.FINDING if finding else Status.FAIL
        return cls(name, expected, computed, status)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status.value,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Claim":
        try:
            return cls(
                name=str(data["name"]),
                expected=data["expected"],
                computed=data["computed"],
                status=Status(data["status"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"malformed claim: {e}") from e


@dataclass
class Certificate:
    command: str
    inputs: Dict[str, Any]
    claims: List[Claim] = field(default_factory=list)
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    toolkit_version: str = __version__
    runtime_ms: int = 0
    rss_mb: float = 0.0

    def check(
        self, name: str, expected: Any, computed: Any, finding: bool = False
    ) -> Claim:
        """Record a claim comparing ``expected`` with ``computed``."""
        claim = Claim.compare(name, expected, computed, finding)
        self.claims.append(claim)
        marker = {Status.PASS: "✨", Status.FAIL: "❌", Status.FINDING: "⚠️ "}
        logger.info(f"{marker[claim.status]} {name}: {claim.status.value}")
        if claim.status is not Status.PASS:
            logger.info(f"   expected {claim.expected!r}, computed {claim.computed!r}")
        return claim

    def witness(self, label: str, data: Any) -> None:
        self.witnesses.append({"label": label, "data": plain(data)})

    @property
    def failed(self) -> List[Claim]:
        return [c for c in self.claims if c.status is Status.FAIL]

    @property
    def findings(self) -> List[Claim]:
        return [c for c in self.claims if c.status is Status.FINDING]

    def claims_block(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "inputs": plain(self.inputs),
            "claims": [c.to_dict() for c in self.claims],
            "witnesses": self.witnesses,
            "toolkit_version": self.toolkit_version,
        }

    def digest(self) -> str:
        """SHA-256 of the claims block in canonical JSON."""
        canonical = json.dumps(
            self.claims_block(), sort_keys=True, separators=(",", ":")
        )
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def to_dict(self) -> Dict[str, Any]:
        data = self.claims_block()
        data["claims_digest"] = self.digest()
        data["resources"] = {"runtime_ms": self.runtime_ms, "rss_mb": self.rss_mb}
        return data

    def write(self, path: Union[str, Path]) -> Path:
        target = Path(path)
        write_json(target, self.to_dict())
        logger.debug(f"certificate written to {target}")
        return target

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Certificate":
        if not isinstance(data, dict):
            raise FormatError("a certificate is a JSON object")
        try:
            certificate = cls(
                command=str(data["command"]),
                inputs=dict(data["inputs"]),
                claims=[Claim.from_dict(c) for c in data["claims"]],
                witnesses=list(data.get("witnesses", [])),
                toolkit_version=str(data["toolkit_version"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"malformed certificate: {e}") from e
        resources = data.get("resources", {})
        certificate.runtime_ms = int(resources.get("runtime_ms", 0))
        certificate.rss_mb = float(resources.get("rss_mb", 0.0))
        stored = data.get("claims_digest")
        if stored is not None and stored != certificate.digest():
            raise FormatError("claims_digest does not match the claims block")
        return certificate

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Certificate":
        return cls.from_dict(read_json(path))


def mismatched_claims(stored: Certificate, recomputed: Certificate) -> List[str]:
    """Names of claims whose record differs between two certificates."""
    before = {c.name: c.to_dict() for c in stored.claims}
    after = {c.name: c.to_dict() for c in recomputed.claims}
    return sorted(
        name for name in before.keys() | after.keys()
        if before.get(name) != after.get(name)
    )
