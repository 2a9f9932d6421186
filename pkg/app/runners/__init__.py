"""
Pneufab command-line runners.

``pneufab_runner`` wires the design -> sheet -> toolpath -> G-code pipeline
behind the seven ``pneufab`` commands.
"""

from .base_runner import BaseRunner

__all__ = ['BaseRunner']
