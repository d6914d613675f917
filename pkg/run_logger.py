import json
from collections import Counter
from datetime import datetime, timedelta
from pathlib import Path
from typing import Any, Dict, Optional

from ed_config import EdConfig, get_config
from ed_logger import get_logger


class RunLogger:
    """Daily JSON log of CLI runs and sweep counterexamples."""

    def __init__(self, log_dir: str = "logs"):
        self.log_dir = Path(log_dir)
        self.log_dir.mkdir(parents=True, exist_ok=True)

    def _log_file(self, day: datetime) -> Path:
        return self.log_dir / f"elemdiv_runs_{day.strftime('%Y-%m-%d')}.json"

    def log_run(self,
                command: str,
                status: str,
                options: Optional[Dict[str, Any]] = None,
                detail: Optional[Dict[str, Any]] = None) -> None:
        """
        Append one entry for a finished command.

        Args:
            command: CLI verb, or "sweep:<kind>" for counterexamples
            status: exit status name ("ok", "failed", "usage", ...)
            options: resolved options of the run
            detail: free-form payload, e.g. a counterexample report
        """
        entry = {
            "timestamp": datetime.now().isoformat(),
            "command": command,
            "status": status,
            "options": options or {},
            "detail": detail,
        }
        if status == "ok":
            get_logger().debug(f"run {command} ok")
        else:
            get_logger().debug(f"run {command} ended with {status}")
        self._save_entry(entry)

    def _save_entry(self, entry: Dict[str, Any]) -> None:
        log_file = self._log_file(datetime.now())
        logs = []
        if log_file.exists():
            try:
                with open(log_file, 'r', encoding='utf-8') as f:
                    logs = json.load(f)
            except (json.JSONDecodeError, IOError) as e:
                get_logger().warning(f"Could not read existing run log: {e}")
                logs = []
        logs.append(entry)
        try:
            with open(log_file, 'w', encoding='utf-8') as f:
                json.dump(logs, f, indent=2, ensure_ascii=False, default=str)
        except IOError as e:
            get_logger().error(f"Could not save run log: {e}")

    def get_run_stats(self, days: int = 7) -> Dict[str, Any]:
        """Counts per command and per status over the last `days` days."""
        stats = {"total_runs": 0, "failed_runs": 0, "commands": Counter(), "statuses": Counter()}
        for i in range(days):
            log_file = self._log_file(datetime.now() - timedelta(days=i))
            if not log_file.exists():
                continue
            try:
                with open(log_file, 'r', encoding='utf-8') as f:
                    daily = json.load(f)
            except (json.JSONDecodeError, IOError) as e:
                get_logger().warning(f"Could not read run log {log_file}: {e}")
                continue
            for entry in daily:
                stats["total_runs"] += 1
                stats["commands"][entry.get("command", "unknown")] += 1
                stats["statuses"][entry.get("status", "unknown")] += 1
                if entry.get("status") != "ok":
                    stats["failed_runs"] += 1
        stats["commands"] = dict(stats["commands"])
        stats["statuses"] = dict(stats["statuses"])
        return stats


_run_logger = None


def get_run_logger() -> RunLogger:
    global _run_logger
    if _run_logger is None:
        _run_logger = RunLogger(get_config().get(EdConfig.LOGS_DIR_KEY, EdConfig.LOGS_DIR_DEFAULT))
    return _run_logger


def log_run(command: str, status: str, options: Optional[Dict[str, Any]] = None,
            detail: Optional[Dict[str, Any]] = None) -> None:
    get_run_logger().log_run(command, status, options, detail)
