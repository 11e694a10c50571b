from typing import Any, Dict

from pydantic import BaseModel, ConfigDict


class CheckResult(BaseModel):
    """Schema for the outcome of an exhaustive law check."""

    model_config = ConfigDict(frozen=True)

    ok: bool
    """True when every instance passed."""

    law: str = ""
    """Name of the checked law, or of the first failing one."""

    witness: Dict[str, Any] = {}
    """The first violating instance, empty on success."""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, law: str) -> "CheckResult":
        return cls(ok=True, law=law)

    @classmethod
    def failed(cls, law: str, **witness: Any) -> "CheckResult":
        return cls(ok=False, law=law, witness=witness)

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"ok": self.ok, "law": self.law}
        if self.witness:
            payload["witness"] = {k: repr(v) for k, v in sorted(self.witness.items())}
        return payload
