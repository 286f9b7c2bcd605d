#!/usr/bin/env python3
"""
Test suite for the Lie algebra classifier centralized logging.
Verifies that command runs are logged to host machine txt files.
"""

import logging
import os
import sys
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from click.testing import CliRunner

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'app'))

from application.classification_cli import cli
from logging_config import SERVICE_NAME, get_logger, setup_service_logging


def _flush_handlers():
    for handler in logging.getLogger().handlers:
        if isinstance(handler, logging.FileHandler):
            handler.flush()


class TestCentralizedLogging(unittest.TestCase):
    """Test centralized logging functionality for the classifier."""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.log_dir = Path(self.directory.name) / "logs"
        self.log_file = self.log_dir / f"{SERVICE_NAME}.log"
        self.environment = patch.dict(os.environ, {
            "CENTRALIZED_LOGGING_ENABLED": "true",
            "CENTRALIZED_LOGGING_PATH": str(self.log_dir),
            "LIEALG_LOG_LEVEL": "INFO",
        })
        self.environment.start()

    def tearDown(self):
        root = logging.getLogger()
        for handler in list(root.handlers):
            handler.close()
            root.removeHandler(handler)
        self.environment.stop()
        self.directory.cleanup()

    def test_01_log_directory_creation(self):
        """Test that the log directory and file are created."""
        setup_service_logging()
        _flush_handlers()
        self.assertTrue(self.log_dir.is_dir(), "Log path should be a directory")
        self.assertTrue(self.log_file.exists(), "Main log file should be created")
        print(f"✅ Log file created: {self.log_file}")

    def test_02_startup_banner(self):
        setup_service_logging()
        _flush_handlers()
        content = self.log_file.read_text(encoding="utf-8")
        self.assertIn(f"=== {SERVICE_NAME.upper()} STARTED ===", content)
        self.assertIn(f"[{SERVICE_NAME}]", content)

    def test_03_marker_methods(self):
        """Test that every marker method writes its prefix."""
        logger = setup_service_logging()
        logger.log_step("Sampling", "family 4")
        logger.log_action("Classifying", "classify-input.json")
        logger.log_success("Catalog verified")
        logger.log_warning("golden file missing")
        try:
            raise ValueError("g6 AK")
        except ValueError as exc:
            logger.log_error("verification failed", exc)
        _flush_handlers()

        content = self.log_file.read_text(encoding="utf-8")
        for marker in ("STEP: Sampling - family 4", "ACTION: Classifying", "SUCCESS: Catalog verified",
                       "WARNING: golden file missing", "ERROR: verification failed - Exception: g6 AK"):
            self.assertIn(marker, content)
        self.assertIn("Traceback", content)

    def test_04_logging_disabled(self):
        with patch.dict(os.environ, {"CENTRALIZED_LOGGING_ENABLED": "false"}):
            logger = setup_service_logging()
        self.assertFalse(logger.logging_enabled)
        self.assertFalse(self.log_file.exists(), "No log file when centralized logging is disabled")

    def test_05_invalid_level_falls_back_to_info(self):
        with patch.dict(os.environ, {"LIEALG_LOG_LEVEL": "chatty"}):
            logger = setup_service_logging()
        self.assertEqual(logger.level, logging.INFO)

    def test_06_command_run_is_logged(self):
        """Test that a CLI command logs its steps without touching stdout."""
        input_path = Path(self.directory.name) / "input.json"
        input_path.write_text('{"lambda": "1"}', encoding="utf-8")

        result = CliRunner().invoke(cli, ["classify", "--input", str(input_path)], obj={})
        self.assertEqual(result.exit_code, 0, result.output)
        _flush_handlers()

        content = self.log_file.read_text(encoding="utf-8")
        self.assertIn("ACTION: Classifying structure constants", content)
        self.assertIn("SUCCESS: Classification complete", content)
        self.assertNotIn("STEP:", result.stdout)

    def test_07_named_logger_reaches_file(self):
        setup_service_logging()
        get_logger().info("[VerificationRunner] 3 jobs")
        _flush_handlers()
        self.assertIn(f"[{SERVICE_NAME}] [{SERVICE_NAME}] [VerificationRunner] 3 jobs",
                      self.log_file.read_text(encoding="utf-8"))

    def test_08_log_format_validation(self):
        """Test that logs follow the expected format."""
        logger = setup_service_logging()
        logger.log_step("Format check")
        _flush_handlers()

        lines = [line for line in self.log_file.read_text(encoding="utf-8").splitlines() if line.strip()]
        self.assertGreater(len(lines), 0)
        for line in lines:
            # Expected format: timestamp LEVEL [component] [service] message
            self.assertTrue(any(level in line for level in ("INFO", "DEBUG", "WARNING", "ERROR")), line)
            self.assertIn(f"[{SERVICE_NAME}]", line)


def run_logging_tests():
    """Run the centralized logging tests."""
    print("=" * 70)
    print("🧪 LIE ALGEBRA CLASSIFIER - CENTRALIZED LOGGING TESTS")
    print("=" * 70)

    suite = unittest.TestLoader().loadTestsFromTestCase(TestCentralizedLogging)
    result = unittest.TextTestRunner(verbosity=2).run(suite)

    print("\n" + "=" * 70)
    if result.wasSuccessful():
        print("🎉 ALL TESTS PASSED!")
    else:
        print("❌ Some tests failed")
        print(f"Failed: {len(result.failures)}")
        print(f"Errors: {len(result.errors)}")

    return result.wasSuccessful()


if __name__ == "__main__":
    success = run_logging_tests()
    sys.exit(0 if success else 1)
