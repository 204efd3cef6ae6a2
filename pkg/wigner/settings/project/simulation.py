import environ

env = environ.FileAwareEnv()

# Largest probability mass allowed to fall outside a truncated Fock space.
# Losses above this are errors; they are never renormalized away.
WIGNER_TAIL_TOL = env.float("WIGNER_TAIL_TOL", default=1e-10)

# Default channel: detector quantum efficiency and the power transmission of
# the displacement beam splitter.
WIGNER_ETA = env.float("WIGNER_ETA", default=0.70)
WIGNER_TRANSMISSION = env.float("WIGNER_TRANSMISSION", default=0.986)

# Default polar grid.
WIGNER_RADII = env.int("WIGNER_RADII", default=20)
WIGNER_PHASES = env.int("WIGNER_PHASES", default=50)
WIGNER_MAX_RADIUS = env.float("WIGNER_MAX_RADIUS", default=2.0)

# Counting runs. The interval duration is metadata only.
WIGNER_INTERVALS = env.int("WIGNER_INTERVALS", default=8000)
WIGNER_INTERVAL_DURATION_US = env.float(
    "WIGNER_INTERVAL_DURATION_US", default=40.0
)
WIGNER_SEED = env.int("WIGNER_SEED", default=20250101)

# Threads used to evaluate scan points. Output does not depend on it.
WIGNER_WORKERS = env.int("WIGNER_WORKERS", default=1)

# Adaptive phase-average quadrature: stop doubling once successive results
# differ by less than the tolerance, or at the order cap.
WIGNER_QUADRATURE_TOL = env.float("WIGNER_QUADRATURE_TOL", default=1e-10)
WIGNER_QUADRATURE_MAX_ORDER = env.int(
    "WIGNER_QUADRATURE_MAX_ORDER", default=4096
)
