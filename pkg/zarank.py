#!/usr/bin/env python3
"""
zarank
Edge bounds and biclique certificates for K_{k,k}-free geometric intersection graphs.
"""

import sys
import os

# Add the current directory to the path for imports
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from src.utils.config import Config
from src.ui.commands import CommandHandler, EXIT_ERROR
from src.ui.terminal import TerminalUI


def main(argv=None):
    # Load configuration
    config = Config()
    config.parse_args(argv)
    logger = config.setup_logging()

    ui = TerminalUI()
    handler = CommandHandler(config, ui)
    try:
        return handler.handle_command(config.command, config.args)
    except KeyboardInterrupt:
        ui.print_error("interrupted")
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"I/O error: {e}")
        ui.print_error(str(e))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
