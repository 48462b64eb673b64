"""
Response Formatter Agent - renders command payloads as versioned JSON or flat CSV
Exact values keep their coefficient lists; CSV carries them as JSON text next to the numeric approximation
"""
import csv
import io
import json
import logging
from typing import Any, Dict, List

from config import SCHEMA_VERSION

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv')


def _is_exact(value: Any) -> bool:
    return isinstance(value, dict) and 'L' in value and 'coeffs' in value


def _flatten(row: Dict[str, Any]) -> Dict[str, Any]:
    """One CSV record: exact values split into level, coefficients and approximation; nested data as JSON"""
    flat = {}
    for key, value in row.items():
        if _is_exact(value):
            flat[f"{key}_L"] = value['L']
            flat[f"{key}_coeffs"] = json.dumps(value['coeffs'])
            flat[f"{key}_re"] = value['approx']['re']
            flat[f"{key}_im"] = value['approx']['im']
        elif isinstance(value, (dict, list, tuple)):
            flat[key] = json.dumps(value)
        elif value is None:
            flat[key] = ''
        else:
            flat[key] = value
    return flat


class ResponseFormatterAgent:
    """Formats command results for output"""

    def format_response(self, payload: Dict[str, Any], fmt: str = 'json') -> str:
        """
        payload: command result with a 'rows' list; other keys are kept as header data in JSON
        """
        if fmt == 'json':
            return self.to_json(payload)
        if fmt == 'csv':
            return self.to_csv(payload.get('rows', []))
        raise ValueError(f"unknown format {fmt}; expected one of {', '.join(FORMATS)}")

    @staticmethod
    def to_json(payload: Dict[str, Any]) -> str:
        document = {'schema': SCHEMA_VERSION}
        document.update(payload)
        return json.dumps(document, indent=2) + "\n"

    @staticmethod
    def to_csv(rows: List[Dict[str, Any]]) -> str:
        records = [_flatten(row) for row in rows]
        fields: List[str] = []
        for record in records:
            fields.extend(key for key in record if key not in fields)
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=fields, restval='', lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        logger.debug(f"to_csv: {len(records)} rows, {len(fields)} columns")
        return buffer.getvalue()
