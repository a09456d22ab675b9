"""Utility functions for hypercert."""

import contextlib
import os
import tempfile
import time
from collections.abc import Generator
from dataclasses import dataclass
from pathlib import Path

import psutil

from hypercert.logging import get_logger

logger = get_logger(__name__)


@contextlib.contextmanager
def atomic_write(filepath: Path) -> Generator[Path, None, None]:
    """Write to a file atomically using a temporary file.

    The caller writes to the yielded temporary path, which replaces
    ``filepath`` only when the block exits without an exception. Certificates
    and exported files are therefore never left half-written.

    Args:
        filepath: Path to the target file

    Yields:
        Path to the temporary file to write to

    Example:
        >>> with atomic_write(Path("verify.cert.json")) as tmp_path:
        ...     tmp_path.write_text("{}")
    """
    filepath.parent.mkdir(parents=True, exist_ok=True)
    handle, name = tempfile.mkstemp(
        prefix=f".{filepath.name}.", suffix=".tmp", dir=str(filepath.parent)
    )
    temp_file = Path(name)
    try:
        os.close(handle)
        yield temp_file
        temp_file.replace(filepath)
        logger.debug(f"Atomically wrote file: {filepath}")
    finally:
        if temp_file.exists():
            try:
                temp_file.unlink()
            except OSError as e:
                logger.warning(f"Failed to clean up temporary file {temp_file}: {e}")


def write_atomic_text(filepath: Path, content: str) -> None:
    with atomic_write(filepath) as tmp_path:
        tmp_path.write_text(content, encoding="utf-8")


@dataclass
class ResourceUsage:
    runtime_ms: int
    rss_mb: float


@contextlib.contextmanager
def measure() -> Generator[ResourceUsage, None, None]:
    """Wall time and resident memory of the enclosed block.

    The yielded record is filled in when the block exits.
    """
    usage = ResourceUsage(0, 0.0)
    process = psutil.Process()
    start = time.perf_counter()
    try:
        yield usage
    finally:
        usage.runtime_ms = int((time.perf_counter() - start) * 1000)
        usage.rss_mb = round(process.memory_info().rss / 1024 / 1024, 1)
