"""Write the predicted parity surface P(β) on a grid, without sampling.

JSON output carries the ordering parameter and the normalization of the
surface over the grid's disk in its metadata; CSV output is the bare table
and the two numbers go to stderr.
"""

from wigner.quasiprob.analytic import (
    normalization_check,
    predicted_surface,
    s_from_losses,
)
from wigner.scans.cli import (
    SimulationCommand,
    add_channel_arguments,
    add_grid_arguments,
    add_output_arguments,
    add_state_arguments,
    build_channel,
    build_grid,
    build_spec,
    exit_codes,
)
from wigner.scans.serialization import JSON, serialize_surface, write_output


class Command(SimulationCommand):
    help = "Write the analytic parity surface on a polar grid."

    def add_arguments(self, parser):
        add_state_arguments(parser)
        add_channel_arguments(parser)
        add_grid_arguments(parser)
        add_output_arguments(parser)

    def handle(self, *args, **options):
        with exit_codes({"state": options.get("state")}):
            spec = build_spec(options)
            channel = build_channel(options)
            grid = build_grid(options)
            gamma = options["gamma"]
            s = s_from_losses(channel).s
            normalization = normalization_check(
                spec, channel, grid.max_radius, gamma=gamma
            )
            metadata = {
                "spec": spec.as_dict(),
                "channel": {
                    "eta": channel.eta,
                    "transmission": channel.transmission,
                    "s": s,
                },
                "grid": grid.as_dict(),
                "gamma": gamma,
                "normalization": normalization,
            }
            values = predicted_surface(spec, grid.betas(), channel, gamma)
            write_output(
                serialize_surface(grid, values, metadata, options["format"]),
                options["out"],
                self.stdout,
            )
        if options["format"] != JSON:
            self.stderr.write(
                f"s = {s:.6f}, normalization over |β| ≤ "
                f"{grid.max_radius:g}: {normalization:.9f}"
            )
