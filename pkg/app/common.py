#!/usr/bin/env python3
"""
Common utilities shared by the runners: file I/O with pneufab diagnostics
and the debug banner.
"""

from pathlib import Path
from typing import Optional, Union

from pneufab.errors import CliError

PathLike = Union[str, Path]


def read_text(path: PathLike) -> str:
    """
    Read a UTF-8 input file, normalizing CRLF to LF.

    Raises:
        CliError: E_IO when the file is missing or unreadable
    """
    try:
        return Path(path).read_text(encoding='utf-8').replace('\r\n', '\n')
    except (OSError, UnicodeDecodeError) as e:
        raise CliError("E_IO", f"cannot read {path}: {getattr(e, 'strerror', None) or e}")


def write_text(path: PathLike, text: str) -> Path:
    """Write UTF-8 with LF line endings, creating parent directories."""
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    except OSError as e:
        raise CliError("E_IO", f"cannot write {path}: {e.strerror or e}")
    return target


def output_path(source: PathLike, suffix: str, out: Optional[PathLike] = None) -> Path:
    """``out`` if given, else ``source`` with its suffix replaced."""
    return Path(out) if out else Path(source).with_suffix(suffix)


def print_banner(title, debug_mode=False, stream=None):
    """
    Print a formatted banner (only in debug mode).

    Args:
        title: Title to display in banner
        debug_mode: If True, print the banner
        stream: Where to print; stdout is reserved for command output, so
            the runners pass stderr
    """
    if debug_mode:
        print(f"╔══════════════════════════════════════════════════════════╗", file=stream)
        print(f"║  {title:<56}║", file=stream)
        print(f"║  DEBUG MODE - Verbose logging enabled                   ║", file=stream)
        print(f"╚══════════════════════════════════════════════════════════╝", file=stream)
