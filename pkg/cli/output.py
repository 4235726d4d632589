import json
import math
import logging
from typing import Any, Dict, List, Optional

import pandas as pd

logger = logging.getLogger(__name__)

BASE_COLUMNS = [
    'omega_au',
    'lambda_nm',
    'P_real',
    'P_imag',
    'beta_AC',
    'beta_ioni',
    'gamma_i',
    'sigma_i',
    'flags',
]

FLOAT_FORMAT = '%.11e'


def build_table(rows: List[Dict[str, Any]]) -> pd.DataFrame:
    """Rows in emission order; base columns first, mode-specific columns after flags."""
    extras = []
    for row in rows:
        extras.extend(key for key in row if key not in BASE_COLUMNS and key not in extras)
    return pd.DataFrame(rows, columns=BASE_COLUMNS + extras)


def metadata_line(version: str, fingerprint: str) -> str:
    return f"# acstark {version} config={fingerprint}\n"


def _json_value(value: Any) -> Any:
    if isinstance(value, float):
        if math.isnan(value):
            return None
        return float(FLOAT_FORMAT % value)
    if hasattr(value, 'item'):
        return _json_value(value.item())
    return value


def render(frame: pd.DataFrame, fmt: str, version: str, fingerprint: str) -> str:
    if fmt == 'json':
        payload = {
            'metadata': {'version': version, 'config_sha256': fingerprint},
            'rows': [{key: _json_value(value) for key, value in record.items()}
                     for record in frame.to_dict(orient='records')],
        }
        return json.dumps(payload, indent=2) + "\n"
    body = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n', na_rep='')
    return metadata_line(version, fingerprint) + body


def write_output(text: str, path: Optional[str], stream) -> None:
    if path:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        logger.info("Wrote %s", path)
    else:
        stream.write(text)
