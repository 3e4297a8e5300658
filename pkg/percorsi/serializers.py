"""Versioned JSON documents."""

import io
import json
from fractions import Fraction

import six
from tippo import Any, Mapping

from .constants import FORMAT_VERSION, INTEGER_TYPES, TEXT_TYPES
from .exceptions import SerializationError

__all__ = [
    "encode_fraction",
    "decode_fraction",
    "envelope",
    "open_envelope",
    "dumps",
    "loads",
    "load_document",
    "load_json_or_file",
]


def encode_fraction(value):
    # type: (Fraction) -> int | str
    """
    Encode an exact rational as an integer or a `"p/q"` string.

    :param value: Value.
    :return: Encoded value.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return "{}/{}".format(value.numerator, value.denominator)


def decode_fraction(encoded):
    # type: (Any) -> Fraction
    """
    Decode an integer or `"p/q"` string.

    :param encoded: Encoded value.
    :return: Value.
    :raises SerializationError: Not an integer or a fraction string.
    """
    if isinstance(encoded, INTEGER_TYPES) and not isinstance(encoded, bool):
        return Fraction(encoded)
    if isinstance(encoded, TEXT_TYPES):
        try:
            return Fraction(encoded)
        except ValueError as e:
            exc = SerializationError("invalid fraction {!r}; {}".format(encoded, e))
            six.raise_from(exc, None)
            raise exc
    error = "expected an integer or a 'p/q' string, got {!r}".format(encoded)
    raise SerializationError(error)


def envelope(payload):
    # type: (Mapping[str, Any]) -> dict[str, Any]
    """
    Stamp a payload with the format version.

    :param payload: Serialized payload.
    :return: Document.
    """
    document = dict(payload)
    document["format_version"] = FORMAT_VERSION
    return document


def open_envelope(document):
    # type: (Any) -> dict[str, Any]
    """
    Check a document's format version (absent means current) and strip it.

    :param document: Document.
    :return: Payload.
    :raises SerializationError: Not a mapping, or unsupported version.
    """
    if not isinstance(document, Mapping):
        error = "document must be a JSON object, got {!r}".format(type(document).__name__)
        raise SerializationError(error)
    payload = dict(document)
    version = payload.pop("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        error = "unsupported format version {!r}, expected {}".format(version, FORMAT_VERSION)
        raise SerializationError(error)
    return payload


def dumps(document):
    # type: (Any) -> str
    """
    Dump to canonical JSON (sorted keys, two-space indentation, trailing newline).

    :param document: Document.
    :return: Text.
    """
    return json.dumps(document, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def loads(text):
    # type: (str) -> Any
    """
    Parse JSON text.

    :param text: Text.
    :return: Document.
    :raises SerializationError: Invalid JSON.
    """
    try:
        return json.loads(text)
    except ValueError as e:
        exc = SerializationError("invalid JSON; {}".format(e))
        six.raise_from(exc, None)
        raise exc


def _read_text(filename):
    # type: (str) -> str
    try:
        with io.open(filename, "r", encoding="utf-8") as stream:
            return stream.read()
    except (IOError, OSError, UnicodeDecodeError) as e:
        exc = SerializationError("cannot read {!r}; {}".format(filename, e))
        six.raise_from(exc, None)
        raise exc


def load_document(filename):
    # type: (str) -> dict[str, Any]
    """
    Read a versioned document from a file.

    :param filename: File name.
    :return: Payload (format version checked and stripped).
    :raises SerializationError: Unreadable file, invalid JSON or unsupported version.
    """
    return open_envelope(loads(_read_text(filename)))


def load_json_or_file(value):
    # type: (str) -> Any
    """
    Parse inline JSON, or read it from a file when the value does not look like JSON.

    :param value: Inline JSON or file name.
    :return: Document (not unwrapped).
    :raises SerializationError: Unreadable file or invalid JSON.
    """
    if value.lstrip()[:1] in ("[", "{"):
        return loads(value)
    return loads(_read_text(value))
