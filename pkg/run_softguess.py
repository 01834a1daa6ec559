#!/usr/bin/env python
"""
softguess - Standalone entry point.
"""
import sys

from softguess.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
