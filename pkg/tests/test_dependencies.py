"""Tests for the dependency checker component."""

import importlib.metadata
import subprocess
from unittest.mock import patch

from hypercert.dependencies import DependencyChecker


def test_check_graphviz_installed() -> None:
    """Test the Graphviz check when dot is installed."""
    with (
        patch("shutil.which", return_value="/usr/local/bin/dot"),
        patch("subprocess.run") as mock_run,
    ):
        checker = DependencyChecker()
        is_available, error = checker.check_graphviz()
        assert is_available
        assert error is None
        mock_run.assert_called_once()


def test_check_graphviz_not_installed() -> None:
    """Test the Graphviz check when dot is missing."""
    with patch("shutil.which", return_value=None):
        checker = DependencyChecker()
        is_available, error = checker.check_graphviz()
        assert not is_available
        assert "Graphviz (dot) is not installed" in str(error)


def test_check_graphviz_broken() -> None:
    """Test the Graphviz check when dot fails to run."""
    with (
        patch("shutil.which", return_value="/usr/local/bin/dot"),
        patch(
            "subprocess.run",
            side_effect=subprocess.CalledProcessError(1, ["dot", "-V"]),
        ),
    ):
        checker = DependencyChecker()
        is_available, error = checker.check_graphviz()
        assert not is_available
        assert "does not run" in str(error)


def test_check_python_packages_all_satisfied() -> None:
    """Test Python package check when all packages are satisfied."""
    with patch("importlib.metadata.version") as mock_version:
        mock_version.return_value = "60.2"  # Satisfies every requirement
        checker = DependencyChecker()
        is_satisfied, missing = checker.check_python_packages()
        assert is_satisfied
        assert not missing


def test_check_python_packages_wrong_version() -> None:
    """Test Python package check with wrong version."""
    with patch("importlib.metadata.version") as mock_version:
        mock_version.return_value = "1.0.0"
        checker = DependencyChecker()
        is_satisfied, missing = checker.check_python_packages()
        assert not is_satisfied
        assert "networkx>=3.0" in missing
        assert "packaging>=21.0" in missing


def test_check_python_packages_missing() -> None:
    """Test Python package check with missing package."""
    with patch("importlib.metadata.version") as mock_version:
        mock_version.side_effect = importlib.metadata.PackageNotFoundError()
        checker = DependencyChecker()
        is_satisfied, missing = checker.check_python_packages()
        assert not is_satisfied
        assert len(missing) == len(DependencyChecker.REQUIRED_PACKAGES)


def test_verify_all_success() -> None:
    """Test verification without Graphviz, which only rendering needs."""
    with (
        patch("shutil.which", return_value=None),
        patch("importlib.metadata.version", return_value="60.2"),
    ):
        checker = DependencyChecker()
        is_satisfied, error = checker.verify_all()
        assert is_satisfied
        assert error is None


def test_verify_all_missing_graphviz() -> None:
    """Test verification when rendering needs the missing dot program."""
    with (
        patch("shutil.which", return_value=None),
        patch("importlib.metadata.version", return_value="60.2"),
    ):
        checker = DependencyChecker()
        is_satisfied, error = checker.verify_all(need_graphviz=True)
        assert not is_satisfied
        assert "Graphviz (dot) is not installed" in str(error)
