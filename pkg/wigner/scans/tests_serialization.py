import json

import pytest

from wigner.lib.exceptions import ConfigurationError
from wigner.quasiprob.params import SignalSpec
from wigner.scans.grid import build_polar_grid
from wigner.scans.runner import ScanRecord, ScanResult, run_scan
from wigner.scans.serialization import (
    CSV_FIELDS,
    format_for_path,
    parse_scan,
    serialize_scan,
    write_output,
)


@pytest.fixture
def result(channel, counting):
    return run_scan(
        SignalSpec.coherent(0.6 - 0.2j),
        build_polar_grid(3, 4, 1.2),
        channel,
        counting,
        include_counts=True,
    )


class TestCsv:
    def test_header_and_rows(self, result):
        lines = serialize_scan(result, "csv").decode().splitlines()
        assert lines[0] == ",".join(CSV_FIELDS)
        assert len(lines) == 1 + len(result)
        assert lines[1].startswith("0,0,")

    def test_round_trip_is_byte_identical(self, result):
        data = serialize_scan(result, "csv")
        assert serialize_scan(parse_scan(data, "csv"), "csv") == data

    def test_floats_survive(self, result):
        parsed = parse_scan(serialize_scan(result, "csv"), "csv")
        assert [r.p_est for r in parsed.records] == [
            r.p_est for r in result.records
        ]

    def test_unexpected_header(self):
        with pytest.raises(ConfigurationError):
            parse_scan(b"r_idx,phi_idx\n0,0\n", "csv")

    def test_malformed_row(self):
        data = (",".join(CSV_FIELDS) + "\n0,0,x,0,0,0,0,0\n").encode()
        with pytest.raises(ConfigurationError):
            parse_scan(data, "csv")


class TestJson:
    def test_metadata(self, result):
        document = json.loads(serialize_scan(result, "json"))
        assert document["metadata"]["master_seed"] == 11
        assert "code_version" in document["metadata"]
        record = document["records"][0]
        assert set(CSV_FIELDS) <= set(record)
        assert sum(record["counts"]) == 500

    def test_round_trip(self, result):
        data = serialize_scan(result, "json")
        parsed = parse_scan(data, "json")
        assert parsed.records == result.records
        assert serialize_scan(parsed, "json") == data

    def test_not_json(self):
        with pytest.raises(ConfigurationError):
            parse_scan(b"{not json", "json")


def test_unknown_format():
    empty = ScanResult((), {})
    with pytest.raises(ConfigurationError):
        serialize_scan(empty, "xml")
    with pytest.raises(ConfigurationError):
        parse_scan(b"", "xml")


@pytest.mark.parametrize(
    "path, fmt",
    [("scan.csv", "csv"), ("scan.JSON", "json"), ("scan", "csv")],
)
def test_format_for_path(path, fmt):
    assert format_for_path(path) == fmt


def test_write_output_surfaces_sink_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        write_output(b"x", tmp_path / "missing" / "scan.csv", None)


def test_record_beta():
    record = ScanRecord(0, 0, 0.5, -0.25, 0.1, 0.01, 0.1, 0.1)
    assert record.beta == 0.5 - 0.25j
