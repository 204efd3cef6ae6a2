from .django import *
from .project.logging import *
from .project.simulation import *
from .project.testing import *
from .third_party.sentry import *
