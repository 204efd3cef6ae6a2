"""Simulate a parity scan over a polar grid and write it as CSV or JSON.

Usage:

    python manage.py scan --scenario coherent --out coherent.csv
    python manage.py scan --state fock --fock-n 1 --format json --include-counts

Identical invocations write byte-identical output, whatever ``--workers``.
"""

from django.conf import settings

from wigner.scans.cli import (
    SimulationCommand,
    add_channel_arguments,
    add_grid_arguments,
    add_output_arguments,
    add_state_arguments,
    build_channel,
    build_counting,
    build_grid,
    build_spec,
    exit_codes,
)
from wigner.scans.runner import run_scan
from wigner.scans.serialization import serialize_scan, write_output


class Command(SimulationCommand):
    help = "Simulate a displaced-parity scan and write the records."

    def add_arguments(self, parser):
        add_state_arguments(parser)
        add_channel_arguments(parser)
        add_grid_arguments(parser)
        parser.add_argument(
            "--intervals", type=int, default=settings.WIGNER_INTERVALS
        )
        parser.add_argument("--seed", type=int, default=settings.WIGNER_SEED)
        parser.add_argument(
            "--workers",
            type=int,
            default=settings.WIGNER_WORKERS,
            help="Threads evaluating grid points. Output does not depend on it.",
        )
        parser.add_argument(
            "--include-counts",
            action="store_true",
            help="Store each point's count histogram (JSON only).",
        )
        add_output_arguments(parser)

    def handle(self, *args, **options):
        context = {
            key: options.get(key)
            for key in ("scenario", "state", "eta", "transmission", "seed")
        }
        with exit_codes(context):
            spec = build_spec(options)
            grid = build_grid(options)
            result = run_scan(
                spec,
                grid,
                build_channel(options),
                build_counting(options),
                options["gamma"],
                workers=options["workers"],
                include_counts=options["include_counts"],
            )
            write_output(
                serialize_scan(result, options["format"]),
                options["out"],
                self.stdout,
            )
        if options["out"]:
            self.stdout.write(
                self.style.SUCCESS(
                    f"Wrote {len(result)} records to {options['out']}"
                )
            )
