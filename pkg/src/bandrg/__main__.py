"""Entry point of ``python -m bandrg``."""
import sys

from bandrg.cli import main

sys.exit(main())
