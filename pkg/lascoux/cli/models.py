"""
Request models

argparse collects the raw flags; these pydantic models validate them before
any subcommand runs.
"""

from enum import Enum
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from lascoux.combi_core import Cell, WeakComposition
from lascoux.heckewords import Permutation
from lascoux.verify import Suite


class Subcommand(str, Enum):
    LASCOUX = "lascoux"
    EXPAND = "expand"
    GROTHENDIECK = "grothendieck"
    INSERT = "insert"
    PSI = "psi"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class _Args(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class LascouxArgs(_Args):
    alpha: WeakComposition
    n: int = Field(ge=0)
    beta_zero: bool = False

    @model_validator(mode="after")
    def _length_matches(self) -> "LascouxArgs":
        if self.alpha.n != self.n:
            raise ValueError(f"alpha has {self.alpha.n} entries but n={self.n}")
        return self


class ExpandArgs(_Args):
    alpha: WeakComposition
    w: Permutation
    n: int = Field(ge=1)
    verify: bool = True
    key_only: bool = False
    threshold: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _length_matches(self) -> "ExpandArgs":
        if self.alpha.n != self.n:
            raise ValueError(f"alpha has {self.alpha.n} entries but n={self.n}")
        return self


class GrothendieckArgs(_Args):
    w: Permutation
    n: Optional[int] = Field(default=None, ge=1)
    verify: bool = True


class InsertArgs(_Args):
    tableau_file: Path
    cell: Cell
    alpha: int

    @field_validator("alpha")
    @classmethod
    def _zero_or_one(cls, v: int) -> int:
        if v not in (0, 1):
            raise ValueError("alpha must be 0 or 1")
        return v


class PsiArgs(_Args):
    pair_file: Path
    inverse: bool = False


class VerifyArgs(_Args):
    suite: Suite = Suite.ALL
    seed: int
    trials: int = Field(ge=0)
    workers: int = Field(ge=1)


CommandArgs = Union[LascouxArgs, ExpandArgs, GrothendieckArgs, InsertArgs, PsiArgs, VerifyArgs]


class Request(BaseModel):
    """A validated command-line invocation."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    subcommand: Subcommand
    args: CommandArgs
    output: OutputFormat = OutputFormat.TEXT
