#!/usr/bin/env python3
"""
Hermitian Hull EAQMDS - Command Line Entry Point
Computes Hermitian hull dimensions of GRS code families and the parameters of
the entanglement-assisted quantum codes they give.

Usage:
    python app.py params 11 5 3 4 3 9
    python app.py table q11 --k-range 8..15
    python app.py verify 4 5 7
    python app.py sweep 11 --format json
"""

import os
import sys

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
