"""
schema.py
The published JSON schema of command-line reports and its validator.

Every report carries a ``report`` field naming its shape (``check``, ``catalyst``, ``gen``,
``riemann``, ``membership``, ``extreme``, ``decompose`` or ``error``).
"""

import os
from functools import lru_cache
from typing import Dict

import jsonschema

from .errors import ReportError
from .utils.utils import get_logger, read_json

logger = get_logger(__name__)

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "schemas", "report.schema.json")


@lru_cache(maxsize=1)
def load_schema() -> Dict:
    return read_json(SCHEMA_PATH)


def validate_report(payload: Dict) -> Dict:
    """Validate a report against the published schema.

    Args:
        payload : JSON-ready report.

    Returns:
        The payload, unchanged.

    Raises:
        ReportError: the payload does not match the schema.

    """
    try:
        jsonschema.validate(instance=payload, schema=load_schema())
    except jsonschema.ValidationError as e:
        logger.error("report %s failed validation: %s", payload.get("report"), e.message)
        raise ReportError(f"Report does not match the schema: {e.message}") from e
    return payload
