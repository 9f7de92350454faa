"""Config module initialization"""

from .settings import Settings, get_settings
from .log_setup import setup_logging

__all__ = [
    "Settings",
    "get_settings",
    "setup_logging",
]
