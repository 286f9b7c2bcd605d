#!/usr/bin/env python3

"""
Test runner for the Lie algebra classifier.

Usage: python run_tests.py [pattern]    (default pattern: test_*.py)
"""

import os
import sys
import unittest

ROOT = os.path.dirname(os.path.abspath(__file__))

# Add the app directory to the path
sys.path.insert(0, os.path.join(ROOT, 'app'))

# Add the tests directory to the path (catalog_mutations helper)
sys.path.insert(0, os.path.join(ROOT, 'tests'))

# Keep test runs off the host log directory
os.environ.setdefault('CENTRALIZED_LOGGING_ENABLED', 'false')


def run_tests(pattern: str = 'test_*.py') -> bool:
    """Discover and run the suites under tests/ matching pattern."""
    suite = unittest.TestLoader().discover(os.path.join(ROOT, 'tests'), pattern=pattern,
                                           top_level_dir=os.path.join(ROOT, 'tests'))
    result = unittest.TextTestRunner(verbosity=2).run(suite)
    return result.wasSuccessful()


if __name__ == '__main__':
    success = run_tests(*sys.argv[1:2])
    sys.exit(0 if success else 1)
