"""Checks on the files the command line reads and writes."""

import os
from pathlib import Path
from typing import Iterable, Optional, Tuple

from hypercert.logging import get_logger

logger = get_logger(__name__)

EDGE_SUFFIXES = (".edges", ".txt")
TRIPLE_SUFFIXES = (".tri", ".txt")
CERTIFICATE_SUFFIXES = (".json",)

ValidationResult = Tuple[bool, Optional[str]]


def _suffix_error(kind: str, path: Path, suffixes: Iterable[str]) -> Optional[str]:
    allowed = tuple(suffixes)
    if path.suffix.lower() in allowed:
        return None
    return f"{kind} file {path} must end in one of {', '.join(allowed)}"


def _writable_directory(path: Path) -> Optional[str]:
    """Create ``path`` if needed; the error message when it cannot take files."""
    if path.exists() and not path.is_dir():
        return f"Output path {path} is not a directory"
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        return f"Cannot create output directory {path}: {e}"
    if not os.access(path, os.W_OK):
        return f"Output directory {path} is not writable"
    return None


class FileValidator:
    """Validates certificate, edge-list and triple-list paths."""

    def validate_input_file(
        self, file_path: str, suffixes: Iterable[str] = CERTIFICATE_SUFFIXES
    ) -> ValidationResult:
        """Validate a file that is about to be read.

        Returns:
            Tuple of (is_valid, error_message)
        """
        path = Path(file_path).resolve()
        if not path.exists():
            return False, f"Input file {path} does not exist"
        if not path.is_file():
            return False, f"Input path {path} is not a file"
        if not os.access(path, os.R_OK):
            return False, f"Input file {path} is not readable"
        error = _suffix_error("Input", path, suffixes)
        if error:
            return False, error
        logger.debug(f"Input file {path} is valid")
        return True, None

    def validate_output_file(
        self, file_path: str, suffixes: Iterable[str] = CERTIFICATE_SUFFIXES
    ) -> ValidationResult:
        """Validate a path that is about to be written, creating its directory.

        Returns:
            Tuple of (is_valid, error_message)
        """
        path = Path(file_path).resolve()
        error = _suffix_error("Output", path, suffixes) or _writable_directory(
            path.parent
        )
        if error:
            return False, error
        if path.exists() and not os.access(path, os.W_OK):
            return False, f"Output file {path} exists but is not writable"
        logger.debug(f"Output file {path} is valid")
        return True, None

    def validate_output_directory(self, dir_path: str) -> ValidationResult:
        """Validate a directory that receives one file per figure."""
        error = _writable_directory(Path(dir_path).resolve())
        return (False, error) if error else (True, None)
