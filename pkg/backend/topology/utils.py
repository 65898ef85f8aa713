# Import necessary libraries
import json
import logging
import os
import re
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from .exceptions import TopologyError

# Configure logger
logger = logging.getLogger(__name__)

DEFAULT_MAX_EXP = 10 ** 6
DEFAULT_LENS_MAX_P = 20

_SUBSCRIPTS = str.maketrans('0123456789', '₀₁₂₃₄₅₆₇₈₉')


def _setting(name, default):
    try:
        return int(getattr(settings, name, default))
    except ImproperlyConfigured:
        # Pure modules stay usable without a configured project.
        return int(os.getenv(name, default))


def max_exponent():
    """
    Returns the largest allowed exponent magnitude of a word syllable.

    Returns:
    - int: ``settings.CURVECAL_MAX_EXP``; without configured settings the
      environment variable of the same name, else 10**6.
    """
    return _setting('CURVECAL_MAX_EXP', DEFAULT_MAX_EXP)


def lens_max_p():
    return _setting('CURVECAL_LENS_MAX_P', DEFAULT_LENS_MAX_P)


def subscript(number):
    return str(number).translate(_SUBSCRIPTS)


def read_source(value):
    """
    Resolves ``@path`` indirection for command-line and API inputs.

    Parameters:
    - value (str): Either literal text or ``@`` followed by a file path.

    Returns:
    - str: The literal text, or the file contents.
    """
    if not value.startswith('@'):
        return value
    path = Path(value[1:])
    try:
        return path.read_text(encoding='utf-8')
    except OSError as exc:
        logger.error(f"Failed to read input file {path}: {exc}")
        raise TopologyError(f"Cannot read {path}: {exc.strerror}") from exc


def extract_json(text):
    """
    Extracts the first JSON object found in a text string.

    Parameters:
    - text (str): The text containing JSON data.

    Returns:
    - dict: The extracted JSON data as a dictionary.
    """
    match = re.search(r'\{.*\}', text, re.DOTALL)
    if match is None:
        raise TopologyError("No JSON object found in input.")
    try:
        return json.loads(match.group())
    except json.JSONDecodeError as exc:
        logger.error("Failed to extract JSON from the text.")
        raise TopologyError(f"Malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from exc
