"""Runtime requirements: the Python stack and, for rendering, Graphviz."""

import importlib.metadata
import shutil
import subprocess
from typing import Dict, List, Optional, Tuple

from packaging.specifiers import SpecifierSet

from hypercert.logging import get_logger

logger = get_logger(__name__)


def _package_problem(package: str, requirement: str) -> Optional[str]:
    """``package<requirement>`` when the installed version misses it."""
    try:
        installed = importlib.metadata.version(package)
    except importlib.metadata.PackageNotFoundError:
        return f"{package}{requirement}"
    if SpecifierSet(requirement).contains(installed):
        return None
    logger.debug(f"{package} {installed} does not satisfy {requirement}")
    return f"{package}{requirement}"


class DependencyChecker:
    """Checks for the solver packages and the optional Graphviz binary."""

    REQUIRED_PACKAGES: Dict[str, str] = {
        "click": ">=8.0.0",
        "networkx": ">=3.0",
        "pydot": ">=1.4.2",
        "psutil": ">=5.9.0",
        "packaging": ">=21.0",
    }

    def check_graphviz(self) -> Tuple[bool, Optional[str]]:
        """Check that ``dot -V`` runs.

        Returns:
            Tuple of (is_available, error_message)
        """
        dot = shutil.which("dot")
        if dot is None:
            return False, "Graphviz (dot) is not installed"
        try:
            subprocess.run([dot, "-V"], capture_output=True, check=True)
        except (subprocess.SubprocessError, FileNotFoundError):
            return False, f"Graphviz (dot) at {dot} does not run"
        return True, None

    def check_python_packages(self) -> Tuple[bool, List[str]]:
        """Unmet requirements are reported as ``networkx>=3.0``.

        Returns:
            Tuple of (is_satisfied, unmet_requirements)
        """
        unmet = [
            problem
            for package, requirement in self.REQUIRED_PACKAGES.items()
            if (problem := _package_problem(package, requirement)) is not None
        ]
        return not unmet, unmet

    def problems(self, need_graphviz: bool = False) -> List[str]:
        found: List[str] = []
        _, unmet = self.check_python_packages()
        if unmet:
            found.append(f"Missing Python packages: {', '.join(unmet)}")
        if need_graphviz:
            available, error = self.check_graphviz()
            if not available:
                found.append(error or "Unknown Graphviz error")
        return found

    def verify_all(self, need_graphviz: bool = False) -> Tuple[bool, Optional[str]]:
        """Verify what a command needs; rendering also needs ``dot``.

        Returns:
            Tuple of (satisfied, error_message)
        """
        found = self.problems(need_graphviz)
        if not found:
            logger.debug("All dependencies satisfied")
            return True, None
        message = "Missing dependencies:\n  • " + "\n  • ".join(found)
        logger.error(f"❌ {message}")
        return False, message
