from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

Subcommand = Literal["check", "normalize", "eq", "compose", "plug", "laws", "fincat", "render"]

_ARITY = {"check": 1, "normalize": 1, "eq": 2, "compose": 2, "plug": 2, "render": 1, "laws": 0}


class Command(BaseModel):
    """Schema for one validated CLI invocation."""

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    """Which engine operation to run."""

    inputs: List[str] = []
    """Diagram literals, or `@path` references to literal/JSON files."""

    sig_path: Optional[str] = None
    """Signature file; the running signature when omitted."""

    slot: Optional[int] = Field(default=None, ge=0)
    """Hole slot for `plug`."""

    suite: Optional[str] = None
    """Law suite for `laws`."""

    seed: Optional[int] = Field(default=None, ge=0)
    """Seed for `laws`; Settings.default_seed when omitted."""

    iters: Optional[int] = Field(default=None, ge=1)
    """Instances per suite; Settings.default_iters when omitted."""

    budget: Optional[int] = Field(default=None, ge=1)
    """Enumeration budget; Settings.budget when omitted."""

    example: Optional[str] = None
    """Named effectful category for `fincat`."""

    category_path: Optional[str] = None
    """Category JSON document for `fincat`."""

    universe: List[int] = [0, 1]
    """Writer universe for `fincat --example writer:*`."""

    verify: List[str] = []
    """Checker names for `fincat --verify`."""

    format: Literal["json", "dot", "literal"] = "json"
    """Output format where a command offers a choice."""

    @model_validator(mode="after")
    def validate_inputs(self):
        arity = _ARITY.get(self.subcommand)
        if arity is not None and len(self.inputs) != arity:
            raise ValueError(f"'{self.subcommand}' takes {arity} input(s), got {len(self.inputs)}")
        if self.subcommand == "laws" and not self.suite:
            raise ValueError("'laws' needs --suite")
        if self.subcommand == "fincat" and not (self.example or self.category_path):
            raise ValueError("'fincat' needs --example or --category")
        return self
