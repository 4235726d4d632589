import os
import csv
import logging
from datetime import datetime, timezone
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: Optional[str] = None):
    """Configure root logging once for entry scripts; library modules never call this."""
    level_name = (level or os.getenv('ACSTARK_LOG_LEVEL', 'INFO')).upper()
    logging.basicConfig(level=getattr(logging, level_name, logging.INFO), format=LOG_FORMAT)


def _ensure_dir(path: str):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)


def log_run(file_path: str, record: dict):
    """Append one run record to a CSV journal, writing the header on first use."""
    _ensure_dir(file_path)
    exists = os.path.exists(file_path)
    record = dict(record)
    record['log_timestamp'] = datetime.now(timezone.utc).isoformat()
    with open(file_path, 'a', newline='', encoding='utf-8') as f:
        writer = csv.DictWriter(f, fieldnames=sorted(record.keys()))
        if not exists:
            writer.writeheader()
        writer.writerow(record)

    logging.getLogger(__name__).info(
        "RUN_LOGGED mode=%s exit_code=%s", record.get('mode', 'unknown'), record.get('exit_code'))
