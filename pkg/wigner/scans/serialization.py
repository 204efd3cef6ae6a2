"""Write scans as CSV or JSON and read them back.

Floats are written with 17 significant digits, so every double survives a
write-read-write cycle byte for byte. CSV rows are radius-major; JSON
wraps the same records together with the run metadata.
"""

import csv
import io
import json
import logging
from pathlib import Path

from wigner.lib.exceptions import ConfigurationError
from wigner.scans.runner import ScanRecord, ScanResult

logger = logging.getLogger(__name__)

CSV = "csv"
JSON = "json"
FORMATS = (CSV, JSON)

CSV_FIELDS = (
    "r_idx",
    "phi_idx",
    "beta_re",
    "beta_im",
    "p_est",
    "p_se",
    "p_exact",
    "p_eq3",
)
_INT_FIELDS = {"r_idx", "phi_idx"}


def format_float(value):
    return format(value, ".17g")


def _record_dict(record):
    row = {name: getattr(record, name) for name in CSV_FIELDS}
    if record.counts is not None:
        row["counts"] = list(record.counts)
    return row


def _record_from_dict(row):
    values = {
        name: int(row[name]) if name in _INT_FIELDS else float(row[name])
        for name in CSV_FIELDS
    }
    counts = row.get("counts")
    return ScanRecord(
        **values, counts=tuple(int(c) for c in counts) if counts else None
    )


def serialize_scan(result, fmt=CSV):
    """Encode *result* as UTF-8 bytes in *fmt*."""
    if fmt == CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for record in result.records:
            writer.writerow(
                str(value) if name in _INT_FIELDS else format_float(value)
                for name, value in _record_dict(record).items()
                if name in CSV_FIELDS
            )
        return buffer.getvalue().encode()
    if fmt == JSON:
        document = {
            "metadata": result.metadata,
            "records": [_record_dict(r) for r in result.records],
        }
        return (json.dumps(document, indent=2) + "\n").encode()
    raise ConfigurationError(f"Unknown format {fmt!r}; use one of {FORMATS}")


def parse_scan(data, fmt=CSV):
    """Decode bytes produced by ``serialize_scan``.

    CSV carries no metadata, so the result's metadata is empty. Malformed
    input raises ``ConfigurationError``.
    """
    try:
        return _parse(data.decode(), fmt)
    except ConfigurationError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"Malformed {fmt} scan: {exc}") from exc


def _parse(text, fmt):
    if fmt == CSV:
        reader = csv.DictReader(io.StringIO(text))
        if tuple(reader.fieldnames or ()) != CSV_FIELDS:
            raise ConfigurationError(
                f"Unexpected CSV header {reader.fieldnames}"
            )
        return ScanResult(tuple(_record_from_dict(row) for row in reader), {})
    if fmt == JSON:
        document = json.loads(text)
        return ScanResult(
            tuple(_record_from_dict(row) for row in document["records"]),
            document.get("metadata", {}),
        )
    raise ConfigurationError(f"Unknown format {fmt!r}; use one of {FORMATS}")


def format_for_path(path):
    """Guess the format from a file suffix, defaulting to CSV."""
    return JSON if Path(path).suffix.lower() == ".json" else CSV


SURFACE_FIELDS = ("r_idx", "phi_idx", "beta_re", "beta_im", "p_eq3")


def serialize_surface(grid, values, metadata, fmt=CSV):
    """Encode an analytic surface laid out on *grid*.

    CSV holds only the table; JSON adds *metadata*.
    """
    rows = [
        (r_idx, phi_idx, beta.real, beta.imag, float(values[r_idx, phi_idx]))
        for _, r_idx, phi_idx, beta in grid.points()
    ]
    if fmt == CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(SURFACE_FIELDS)
        for r_idx, phi_idx, *floats in rows:
            writer.writerow([r_idx, phi_idx, *map(format_float, floats)])
        return buffer.getvalue().encode()
    if fmt == JSON:
        document = {
            "metadata": metadata,
            "records": [dict(zip(SURFACE_FIELDS, row)) for row in rows],
        }
        return (json.dumps(document, indent=2) + "\n").encode()
    raise ConfigurationError(f"Unknown format {fmt!r}; use one of {FORMATS}")


def write_output(data, path, stream):
    """Write *data* to *path*, or to the text *stream* when *path* is None.

    ``OSError`` from the sink propagates unchanged.
    """
    if path is None:
        stream.write(data.decode(), ending="")
        return
    Path(path).write_bytes(data)
    logger.info("Wrote %d bytes to %s", len(data), path)
