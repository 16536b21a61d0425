import sys
from springerstab.main import run

sys.exit(run())
