# utils/input_fetcher.py

import json
import logging
import os
from typing import Any, Dict
from urllib.parse import urlparse

import requests


class InputFetcher:
    """Loads classify input (structure constants as JSON) from a URL or a local file."""

    def __init__(self, timeout: float = None):
        self.logger = logging.getLogger(__name__)
        self.timeout = timeout if timeout is not None else float(os.getenv("INPUT_FETCH_TIMEOUT", "30"))

    def is_url(self, string: str) -> bool:
        """Check if a string is a URL or a local file path."""
        try:
            result = urlparse(string)
            return result.scheme in ("http", "https") and bool(result.netloc)
        except ValueError:
            return False

    def fetch(self, url_or_path: str) -> Dict[str, Any]:
        """
        Fetch a JSON object from either a URL or a local file path.

        Args:
            url_or_path: http(s) URL or local file path

        Returns:
            The decoded JSON document

        Raises:
            FileNotFoundError: if no candidate path exists
            requests.RequestException: if the URL cannot be fetched
            ValueError: if the payload is not valid JSON
        """
        if self.is_url(url_or_path):
            return self._fetch_from_url(url_or_path)
        return self._fetch_from_file(url_or_path)

    def _fetch_from_url(self, url: str) -> Dict[str, Any]:
        self.logger.info(f"[InputFetcher] Fetching input from URL: {url}")
        response = requests.get(url, timeout=self.timeout)
        response.raise_for_status()
        return response.json()

    def _fetch_from_file(self, file_path: str) -> Dict[str, Any]:
        if not os.path.isabs(file_path):
            repository_root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
            search_paths = [
                file_path,                                  # Current directory
                os.path.join(repository_root, file_path),   # Repository root
            ]
            found_path = next((path for path in search_paths if os.path.exists(path)), None)
            if found_path is None:
                raise FileNotFoundError(f"Input file not found in any of: {search_paths}")
            file_path = found_path
        elif not os.path.exists(file_path):
            raise FileNotFoundError(f"Input file not found: {file_path}")

        self.logger.info(f"[InputFetcher] Reading input from: {file_path}")
        with open(file_path, "r", encoding="utf-8") as handle:
            return json.load(handle)
