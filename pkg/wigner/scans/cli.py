"""Arguments and error handling shared by the scan commands.

Flags fall back to a ``--scenario`` preset and then to the ``WIGNER_*``
settings. Errors leave a command as ``CommandError`` with the exit code
of their class: 1 for invalid configuration (argument errors included),
2 for numerical failures and 3 for I/O failures.
"""

import logging
import math
import sys
from contextlib import contextmanager

import sentry_sdk
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from wigner.estimator.sampling import CountingConfig
from wigner.lib.exceptions import ConfigurationError, ScanPointError
from wigner.quasiprob.params import (
    ChannelParams,
    NoiseDistribution,
    PhaseNoiseModel,
    SignalSpec,
)
from wigner.scans.grid import build_polar_grid
from wigner.scans.serialization import FORMATS

logger = logging.getLogger(__name__)

EXIT_CONFIGURATION = 1
EXIT_NUMERICAL = 2
EXIT_IO = 3

STATES = ("vacuum", "coherent", "phase-diffused", "fock")

NOISE_CHOICES = {
    "none": NoiseDistribution.NONE,
    "uniform": NoiseDistribution.UNIFORM,
    "arcsine": NoiseDistribution.ARCSINE,
    "gaussian": NoiseDistribution.WRAPPED_GAUSSIAN,
}

# Measured surfaces: state, phase count and counting interval per panel.
SCENARIOS = {
    "vacuum": {"state": "vacuum", "phases": 50, "interval_us": 40.0},
    "coherent": {"state": "coherent", "phases": 50, "interval_us": 40.0},
    "phase-diffused": {
        "state": "phase-diffused",
        "phases": 40,
        "interval_us": 30.0,
    },
}


def _config_error(parser, message):
    if not parser.called_from_command_line:
        raise CommandError(f"Error: {message}", returncode=EXIT_CONFIGURATION)
    parser.print_usage(sys.stderr)
    parser.exit(EXIT_CONFIGURATION, f"{parser.prog}: error: {message}\n")


class SimulationCommand(BaseCommand):
    """Base for commands that translate library errors into exit codes."""

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = lambda message: _config_error(parser, message)
        return parser


def add_state_arguments(parser):
    parser.add_argument(
        "--scenario",
        choices=sorted(SCENARIOS),
        help="Preset state, phase count and counting interval.",
    )
    parser.add_argument("--state", choices=STATES)
    parser.add_argument("--alpha-re", type=float, default=1.0)
    parser.add_argument("--alpha-im", type=float, default=0.0)
    parser.add_argument(
        "--fock-n", type=int, default=1, help="Photon number of a Fock state."
    )
    parser.add_argument(
        "--phase-noise",
        choices=sorted(NOISE_CHOICES),
        default="uniform",
        help="Phase distribution of a phase-diffused state.",
    )
    parser.add_argument(
        "--noise-width",
        type=float,
        help="Half-width (uniform, arcsine) or std (gaussian) in radians. "
        "Defaults to π for uniform and arcsine.",
    )


def add_channel_arguments(parser):
    parser.add_argument("--eta", type=float, default=settings.WIGNER_ETA)
    parser.add_argument(
        "--transmission", type=float, default=settings.WIGNER_TRANSMISSION
    )
    parser.add_argument(
        "--gamma",
        type=float,
        default=0.0,
        help="Mode-mismatch envelope rate; 0 disables it.",
    )


def add_grid_arguments(parser):
    parser.add_argument("--radii", type=int, default=settings.WIGNER_RADII)
    parser.add_argument("--phases", type=int)
    parser.add_argument(
        "--max-radius", type=float, default=settings.WIGNER_MAX_RADIUS
    )


def add_output_arguments(parser):
    parser.add_argument("--format", choices=FORMATS, default="csv")
    parser.add_argument("--out", help="Output file; stdout when omitted.")


def _scenario(options):
    name = options.get("scenario")
    return SCENARIOS[name] if name else {}


def build_spec(options):
    state = options.get("state") or _scenario(options).get("state", "vacuum")
    amplitude = complex(options["alpha_re"], options["alpha_im"])
    match state:
        case "vacuum":
            return SignalSpec.vacuum()
        case "coherent":
            return SignalSpec.coherent(amplitude)
        case "fock":
            return SignalSpec.fock(options["fock_n"])
        case "phase-diffused":
            distribution = NOISE_CHOICES[options["phase_noise"]]
            width = options.get("noise_width")
            if width is None:
                if distribution == NoiseDistribution.WRAPPED_GAUSSIAN:
                    raise ConfigurationError(
                        "--noise-width is required for gaussian phase noise"
                    )
                width = math.pi
            return SignalSpec.phase_diffused(
                amplitude, PhaseNoiseModel(distribution, width)
            )
    raise ConfigurationError(f"Unknown state {state!r}")


def build_channel(options):
    return ChannelParams(options["eta"], options["transmission"])


def build_grid(options):
    phases = options.get("phases")
    if phases is None:
        phases = _scenario(options).get("phases", settings.WIGNER_PHASES)
    return build_polar_grid(options["radii"], phases, options["max_radius"])


def build_counting(options):
    return CountingConfig(
        intervals=options["intervals"],
        interval_duration_us=_scenario(options).get(
            "interval_us", settings.WIGNER_INTERVAL_DURATION_US
        ),
        master_seed=options["seed"],
    )


@contextmanager
def exit_codes(context):
    """Map library errors raised in the block onto ``CommandError``.

    *context* is attached to Sentry events for numerical failures.
    """
    sentry_sdk.set_context("wigner", context)
    try:
        yield
    except ConfigurationError as exc:
        raise CommandError(str(exc), returncode=EXIT_CONFIGURATION) from exc
    except ScanPointError as exc:
        cause = exc.__cause__
        if isinstance(cause, ConfigurationError):
            raise CommandError(
                f"{exc}: {cause}", returncode=EXIT_CONFIGURATION
            ) from exc
        logger.exception("Scan point failed")
        raise CommandError(f"{exc}: {cause}", returncode=EXIT_NUMERICAL) from exc
    except (ArithmeticError, RuntimeError) as exc:
        logger.exception("Numerical failure")
        raise CommandError(str(exc), returncode=EXIT_NUMERICAL) from exc
    except OSError as exc:
        raise CommandError(str(exc), returncode=EXIT_IO) from exc
