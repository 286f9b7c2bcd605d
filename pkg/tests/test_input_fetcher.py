#!/usr/bin/env python3

import unittest
import json
import sys
import os
import tempfile
from unittest.mock import Mock, patch

import requests

# Add the app directory to the path so we can import modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'app'))

from utils.input_fetcher import InputFetcher


class TestInputFetcher(unittest.TestCase):

    def setUp(self):
        self.fetcher = InputFetcher(timeout=5)

    def test_is_url(self):
        self.assertTrue(self.fetcher.is_url("https://example.org/input.json"))
        self.assertTrue(self.fetcher.is_url("http://localhost:8000/sc.json"))
        self.assertFalse(self.fetcher.is_url("classify-input.json"))
        self.assertFalse(self.fetcher.is_url("/tmp/input.json"))
        self.assertFalse(self.fetcher.is_url("ftp://example.org/input.json"))

    @patch('utils.input_fetcher.requests.get')
    def test_fetch_from_url(self, mock_get):
        response = Mock()
        response.json.return_value = {"lambda": "1"}
        mock_get.return_value = response

        self.assertEqual(self.fetcher.fetch("https://example.org/input.json"), {"lambda": "1"})
        mock_get.assert_called_once_with("https://example.org/input.json", timeout=5)
        response.raise_for_status.assert_called_once()

    @patch('utils.input_fetcher.requests.get')
    def test_http_error_propagates(self, mock_get):
        mock_get.return_value.raise_for_status.side_effect = requests.HTTPError("404")
        with self.assertRaises(requests.HTTPError):
            self.fetcher.fetch("https://example.org/missing.json")

    def test_fetch_from_file(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
            json.dump({"alpha": "1/2"}, handle)
        try:
            self.assertEqual(self.fetcher.fetch(handle.name), {"alpha": "1/2"})
        finally:
            os.unlink(handle.name)

    def test_relative_path_falls_back_to_repository_root(self):
        payload = self.fetcher.fetch("classify-input.json")
        self.assertIn("lambda", payload)

    def test_missing_file(self):
        with self.assertRaises(FileNotFoundError):
            self.fetcher.fetch("no-such-input.json")

    @patch.dict(os.environ, {"INPUT_FETCH_TIMEOUT": "12"})
    def test_timeout_from_environment(self):
        self.assertEqual(InputFetcher().timeout, 12.0)


if __name__ == '__main__':
    unittest.main()
