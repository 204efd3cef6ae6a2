import sys

TESTING = "test" in sys.argv or any("pytest" in arg for arg in sys.argv)
