import logging
import os
from logging.handlers import RotatingFileHandler
from rich.console import Console
from rich.panel import Panel

from ed_config import EdConfig, get_config


class EdLogger:
    def __init__(self, name="elemdiv", log_dir="logs", level="INFO",
                 max_bytes=10*1024*1024, backup_count=5):
        self.name = name
        self.log_dir = log_dir
        self.console = Console(stderr=True)

        os.makedirs(log_dir, exist_ok=True)

        self.logger = logging.getLogger(name)
        self.logger.setLevel(getattr(logging, str(level).upper(), logging.INFO))

        if not self.logger.handlers:
            log_file = os.path.join(log_dir, f"{name}.log")

            handler = RotatingFileHandler(
                log_file,
                maxBytes=max_bytes,
                backupCount=backup_count
            )

            formatter = logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S'
            )
            handler.setFormatter(formatter)

            self.logger.addHandler(handler)

    def _echo(self, message):
        self.console.print(f">> {self.name}: {message}", markup=False, highlight=False)

    def info(self, message):
        self.logger.info(message)
        if self.logger.isEnabledFor(logging.INFO):
            self._echo(message)

    def debug(self, message):
        # file only; reductions log at debug and would flood the console
        self.logger.debug(message)

    def error(self, message):
        self.logger.error(message)
        self._echo(message)

    def warning(self, message):
        self.logger.warning(message)
        self._echo(message)

    def critical(self, message):
        self.logger.critical(message)
        self._echo(message)

    def banner(self, message):
        self.console.print(Panel(message, title="elemdiv", border_style="green"))


_ed_logger = None

def get_logger():
    global _ed_logger
    if _ed_logger is None:
        config = get_config()
        _ed_logger = EdLogger(
            log_dir=config.get(EdConfig.LOGS_DIR_KEY, EdConfig.LOGS_DIR_DEFAULT),
            level=config.get(EdConfig.LOG_LEVEL_KEY, EdConfig.LOG_LEVEL_DEFAULT),
        )
    return _ed_logger


_console = None
def get_console():
    global _console
    if _console is None:
        _console = Console()
    return _console
