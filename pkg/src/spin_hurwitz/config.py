"""Runtime configuration read from the environment (and an optional ``.env`` file)."""

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

TRUNCATION_MARGIN_VAR = "SPINH_TRUNCATION_MARGIN"
LOG_LEVEL_VAR = "SPINH_LOG_LEVEL"

# Entries kept by each memoized helper of the computation services.
CACHE_SIZE = 1 << 16


class Settings(BaseModel):
    """Configuration for the computation engines and the command line.

    Attributes:
        truncation_margin (int): Extra local orders allocated by the topological recursion
            on top of the pole-order bound.
        log_level (str): Level of the stderr log sink installed by the command line.
    """

    truncation_margin: int = Field(default=2, ge=0)
    log_level: str = Field(default="WARNING")


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    """Load settings from the environment, honouring a ``.env`` file in the working directory.

    Returns:
        The validated settings, cached for the lifetime of the process.

    Raises:
        ValueError: If a variable holds a value the settings model rejects.
    """
    load_dotenv()
    values: dict[str, str] = {}
    if (margin := os.getenv(TRUNCATION_MARGIN_VAR)) is not None:
        values["truncation_margin"] = margin
    if (level := os.getenv(LOG_LEVEL_VAR)) is not None:
        values["log_level"] = level.upper()
    try:
        return Settings.model_validate(values)
    except ValidationError as e:
        raise ValueError(f"Invalid {TRUNCATION_MARGIN_VAR}/{LOG_LEVEL_VAR} setting: {e}") from e
