#!/usr/bin/env python3
"""
gbounds - development entry point

Runs the command line interface straight from a source checkout, without
installing the package:

    python main.py bounds --named cbip:2,1000
    python main.py verify --catalog 6
"""

import sys
from pathlib import Path

# Add src to path for development
sys.path.insert(0, str(Path(__file__).parent / "src"))

from gbounds.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
