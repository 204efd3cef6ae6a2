import environ

from .project.testing import TESTING

env = environ.FileAwareEnv()

DEVELOPMENT = env.bool("DEVELOPMENT", default=True)

# Nothing here is served over HTTP, but Django refuses to configure itself
# without a key.
SECRET_KEY = env(
    "SECRET_KEY", default="dev-only-insecure-key-not-for-production"
)

DEBUG = env.bool("DEBUG", default=DEVELOPMENT)

# Scans are written to flat files; there is no database.
DATABASES: dict[str, dict] = {}

INSTALLED_APPS = [
    "wigner.lib",
    "wigner.fock",
    "wigner.quasiprob",
    "wigner.experiment",
    "wigner.estimator",
    "wigner.scans",
]

if TESTING:
    DEBUG = env.bool("TESTING_DEBUG", default=False)

################
# Misc. Django #
################
USE_I18N = False
DEFAULT_CHARSET = "utf-8"
LANGUAGE_CODE = "en-us"
USE_TZ = True
TIME_ZONE = env("TIMEZONE", default="UTC")
