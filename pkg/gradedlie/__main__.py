"""Run the gradedlie command line with ``python -m gradedlie``."""
from .cli import main

main()
