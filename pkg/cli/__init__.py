"""Command-line front end."""

from .main import CliConfig, build_parser, main

__all__ = ["CliConfig", "build_parser", "main"]
