"""Run the simulation's self-checks against its closed-form oracles.

Exits with code 2 when any residual exceeds its tolerance. Also available
as ``python manage.py oracle-check``.
"""

from wigner.lib.exceptions import OracleMismatchError
from wigner.scans.cli import SimulationCommand, exit_codes
from wigner.scans.oracle import run_oracle_checks


class Command(SimulationCommand):
    help = "Check simulated statistics against the analytic oracles."

    def handle(self, *args, **options):
        with exit_codes({"command": "oracle_check"}):
            checks = run_oracle_checks()
            for check in checks:
                status = "ok  " if check.passed else "FAIL"
                self.stdout.write(
                    f"{status} {check.residual:.3e} "
                    f"(tol {check.tolerance:.0e})  {check.name}"
                )
            failed = [c.name for c in checks if not c.passed]
            if failed:
                raise OracleMismatchError(
                    f"{len(failed)} oracle checks failed: {', '.join(failed)}"
                )
        self.stdout.write(self.style.SUCCESS(f"All {len(checks)} checks passed"))
