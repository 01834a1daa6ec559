"""
softguess - Entry point for running as module.

Usage:
    python -m softguess COMMAND [options]
"""

import sys


def main():
    """Main entry point."""
    # Absolute import keeps frozen builds working
    try:
        from .cli.main import main as run_cli
    except ImportError:
        from softguess.cli.main import main as run_cli

    return run_cli()


if __name__ == "__main__":
    sys.exit(main())
