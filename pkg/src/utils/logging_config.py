import logging
import logging.handlers
import os
from datetime import datetime
from typing import Optional

from ..config import get_settings


def setup_logging(level: Optional[str] = None, log_dir: Optional[str] = None):
    """Configure logging for the application"""
    settings = get_settings()
    level_name = (level or settings.log_level).upper()
    log_dir = log_dir or settings.log_dir

    # Console handler writes to stderr so stdout stays clean for command output
    handlers = [logging.StreamHandler()]

    log_file = None
    if log_dir:
        # Create logs directory if it doesn't exist
        if not os.path.exists(log_dir):
            os.makedirs(log_dir)

        # Generate log filename with timestamp
        log_file = os.path.join(
            log_dir, f'yinset_{datetime.now().strftime("%Y%m%d_%H%M%S")}.log'
        )
        handlers.append(
            # File handler with rotation
            logging.handlers.RotatingFileHandler(
                log_file,
                maxBytes=1024 * 1024,  # 1MB
                backupCount=5
            )
        )

    # Configure logging
    logging.basicConfig(
        level=getattr(logging, level_name, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )

    # Set specific log levels for different modules
    logging.getLogger('matplotlib').setLevel(logging.WARNING)

    # Log startup information
    logger = logging.getLogger(__name__)
    logger.info("Logging system initialized")
    if log_file:
        logger.info(f"Log file: {log_file}")

    return logger
