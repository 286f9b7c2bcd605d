"""
Centralized logging configuration for the Lie algebra classifier.

Console output goes to stderr so that JSON reports on stdout stay machine-readable.
When enabled, the same lines are appended to a rotating file on the host.
Configurable via environment variables:
- CENTRALIZED_LOGGING_ENABLED: true/false (default: true)
- CENTRALIZED_LOGGING_PATH: directory for log files (default: logs)
- LIEALG_LOG_LEVEL: root log level name (default: INFO)
"""
import logging
import logging.handlers
import os
import sys
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Optional

SERVICE_NAME = "liealg-classifier"
LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] [{service}] %(message)s"
MAX_LOG_BYTES = 50 * 1024 * 1024
LOG_BACKUPS = 5


@dataclass(frozen=True)
class LoggingSettings:
    service_name: str
    log_dir: Path
    file_enabled: bool
    level: int

    @classmethod
    def from_env(cls, service_name: str = SERVICE_NAME, log_dir: Optional[str] = None) -> "LoggingSettings":
        level = logging.getLevelName(os.getenv('LIEALG_LOG_LEVEL', 'INFO').upper())
        return cls(
            service_name=service_name,
            log_dir=Path(log_dir if log_dir is not None else os.getenv('CENTRALIZED_LOGGING_PATH', 'logs')),
            file_enabled=os.getenv('CENTRALIZED_LOGGING_ENABLED', 'true').lower() == 'true',
            level=level if isinstance(level, int) else logging.INFO,
        )

    @property
    def log_file(self) -> Path:
        return self.log_dir / f"{self.service_name}.log"


class CentralizedLogger:
    """
    Installs the classifier's handlers on the root logger and writes marker lines
    (STEP / ACTION / SUCCESS / WARNING / ERROR) for command runs.
    """

    def __init__(self, service_name: str = SERVICE_NAME, log_dir: Optional[str] = None):
        self.settings = LoggingSettings.from_env(service_name, log_dir)
        self._install_handlers()

    @property
    def service_name(self) -> str:
        return self.settings.service_name

    @property
    def log_dir(self) -> Path:
        return self.settings.log_dir

    @property
    def log_file(self) -> Path:
        return self.settings.log_file

    @property
    def logging_enabled(self) -> bool:
        return self.settings.file_enabled

    @property
    def level(self) -> int:
        return self.settings.level

    def _file_handler(self, formatter: logging.Formatter) -> logging.Handler:
        self.log_dir.mkdir(parents=True, exist_ok=True)
        handler = logging.handlers.RotatingFileHandler(
            self.log_file, maxBytes=MAX_LOG_BYTES, backupCount=LOG_BACKUPS, encoding='utf-8'
        )
        handler.setLevel(self.level)
        handler.setFormatter(formatter)
        return handler

    def _install_handlers(self):
        root = logging.getLogger()
        root.setLevel(self.level)
        root.handlers.clear()

        formatter = logging.Formatter(LOG_FORMAT.format(service=self.service_name))
        console = logging.StreamHandler(sys.stderr)
        console.setLevel(self.level)
        console.setFormatter(formatter)
        root.addHandler(console)

        banner = f"=== {self.service_name.upper()} STARTED"
        if not self.logging_enabled:
            root.info(f"{banner} (Console Only - Centralized Logging Disabled) ===")
        else:
            try:
                root.addHandler(self._file_handler(formatter))
                root.info(f"{banner} ===")
                root.info(f"Logging to: {self.log_file}")
            except (PermissionError, OSError) as e:
                root.warning(f"File logging disabled: {e}")
                root.info(f"{banner} (Console Only) ===")
        root.info(f"Timestamp: {datetime.now().isoformat()}")

    @staticmethod
    def _marker(level: int, marker: str, text: str, details: str = "", **kwargs):
        message = f"{marker}: {text}"
        if details:
            message += f" - {details}"
        logging.log(level, message, **kwargs)

    def log_step(self, step_name: str, details: str = ""):
        self._marker(logging.INFO, "STEP", step_name, details)

    def log_action(self, action: str, details: str = ""):
        self._marker(logging.INFO, "ACTION", action, details)

    def log_success(self, operation: str, details: str = ""):
        self._marker(logging.INFO, "SUCCESS", operation, details)

    def log_warning(self, warning_msg: str):
        self._marker(logging.WARNING, "WARNING", warning_msg)

    def log_error(self, error_msg: str, exception: Optional[BaseException] = None):
        """Log an error; with an exception, its message and traceback are included."""
        if exception is None:
            self._marker(logging.ERROR, "ERROR", error_msg)
        else:
            self._marker(logging.ERROR, "ERROR", error_msg, f"Exception: {exception}", exc_info=exception)


def setup_service_logging(service_name: str = SERVICE_NAME, log_dir: Optional[str] = None) -> CentralizedLogger:
    """Configure logging for one command run and return the marker logger."""
    return CentralizedLogger(service_name, log_dir)


def get_logger(service_name: str = SERVICE_NAME) -> logging.Logger:
    return logging.getLogger(service_name)
