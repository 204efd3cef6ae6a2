"""Compare a saved scan's estimates with its exact parity values."""

from pathlib import Path

from wigner.scans.analysis import compare_scan, fit_peak, isotropy_test
from wigner.scans.cli import SimulationCommand, exit_codes
from wigner.scans.serialization import FORMATS, format_for_path, parse_scan


class Command(SimulationCommand):
    help = "Report estimator-vs-exact agreement for a scan file."

    def add_arguments(self, parser):
        parser.add_argument("path", help="CSV or JSON written by `scan`.")
        parser.add_argument(
            "--format",
            choices=FORMATS,
            help="Input format; guessed from the suffix when omitted.",
        )
        parser.add_argument(
            "--fit-peak",
            action="store_true",
            help="Fit a 2-D Gaussian to the estimated surface.",
        )
        parser.add_argument(
            "--isotropy",
            action="store_true",
            help="χ² test for rotational symmetry at each radius.",
        )

    def handle(self, *args, path, **options):
        fmt = options["format"] or format_for_path(path)
        with exit_codes({"path": path}):
            result = parse_scan(Path(path).read_bytes(), fmt)
            report = compare_scan(result)
            self.stdout.write(f"points:            {report.n_points}")
            self.stdout.write(f"points with SE>0:  {report.n_with_se}")
            self.stdout.write(f"max |z|:           {report.max_abs_z:.3f}")
            self.stdout.write(f"fraction |z|>2:    {report.frac_z_gt_2:.4f}")
            self.stdout.write(f"fraction |z|>3:    {report.frac_z_gt_3:.4f}")
            self.stdout.write(f"identity RMS:      {report.identity_rms:.3e}")
            self.stdout.write(f"normalization:     {report.normalization:.6f}")

            if options["fit_peak"]:
                peak = fit_peak(result)
                self.stdout.write(
                    f"peak centre {peak.center.real:+.4f}"
                    f"{peak.center.imag:+.4f}j (radius {peak.radius:.4f}), "
                    f"height {peak.height:.4f} ± {peak.nearest_se:.4f}, "
                    f"width {peak.width:.4f}"
                )
            if options["isotropy"]:
                for row in isotropy_test(result):
                    self.stdout.write(
                        f"r={row.radius:.4f}  χ²={row.chi2:.2f}  "
                        f"dof={row.dof}  p={row.p_value:.4f}"
                    )
