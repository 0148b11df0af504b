"""
Command-line interface to the galois-kit package.
"""

import sys

from galois_kit.cli import main

if __name__ == '__main__':
    sys.exit(main())
