"""Utility helpers for the toolkit."""

from .bits import bits_to_code, code_to_bits, format_bits, format_code, parse_bits, width_mask
from .logging import configure_basic_logging, get_logger, log_elapsed
from .parallel import chunk_ranges, map_items, run_chunked

__all__ = [
    "bits_to_code",
    "code_to_bits",
    "format_bits",
    "format_code",
    "parse_bits",
    "width_mask",
    "get_logger",
    "configure_basic_logging",
    "log_elapsed",
    "chunk_ranges",
    "map_items",
    "run_chunked",
]
