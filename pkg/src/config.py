"""
Runtime settings read from the environment (and a local .env file).
"""

import os
import logging
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()

DEFAULT_EPSILON = 1e-9


@dataclass(frozen=True)
class Settings:
    epsilon: float = DEFAULT_EPSILON
    log_level: str = "INFO"
    log_dir: Optional[str] = None
    validate_results: bool = False
    render_fill: str = "#9ecae1"
    render_stroke: str = "#08306b"
    render_width_in: float = 6.0


def _float_env(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        logger.warning(f"Ignoring invalid {name}={raw!r}, using {default}")
        return default


def get_settings() -> Settings:
    """Read settings from the environment at call time"""
    epsilon = _float_env("YINSET_EPSILON", DEFAULT_EPSILON)
    if not epsilon > 0:
        logger.warning(f"YINSET_EPSILON must be positive, using {DEFAULT_EPSILON}")
        epsilon = DEFAULT_EPSILON

    return Settings(
        epsilon=epsilon,
        log_level=os.getenv("YINSET_LOG_LEVEL", "INFO").upper(),
        log_dir=os.getenv("YINSET_LOG_DIR") or None,
        validate_results=os.getenv("YINSET_VALIDATE_RESULTS", "false").lower()
        == "true",
        render_fill=os.getenv("YINSET_RENDER_FILL", "#9ecae1"),
        render_stroke=os.getenv("YINSET_RENDER_STROKE", "#08306b"),
        render_width_in=_float_env("YINSET_RENDER_WIDTH_IN", 6.0),
    )
