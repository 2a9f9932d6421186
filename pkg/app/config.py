#!/usr/bin/env python3
"""
Centralized configuration for the pneufab entry points.

Only operational settings live here. Nothing in this module changes a
generated artifact: designs, machine profiles and material files are passed
on the command line.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file if it exists
# Look for .env in parent directory (project root)
env_path = Path(__file__).parent.parent / '.env'
if env_path.exists():
    load_dotenv(dotenv_path=env_path)

# Error tracking (disabled when empty)
SENTRY_DSN = os.getenv("SENTRY_DSN", "")
SENTRY_ENVIRONMENT = os.getenv("SENTRY_ENVIRONMENT", "development")

# Log level when --debug is not given
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
