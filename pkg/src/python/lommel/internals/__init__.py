import sys
import time

__doc__ = """
Implementation of the ``lommel`` command line, plus the diagnostic printer
shared by the library modules.
"""

_VERBOSE = False

def set_verbose(flag: bool):
    global _VERBOSE
    _VERBOSE = bool(flag)

def is_verbose() -> bool:
    return _VERBOSE

# (silent unless --verbose; stderr otherwise only carries the JSON error line)
def info(*args):
    if not _VERBOSE:
        return
    print(*args, file=sys.stderr); sys.stderr.flush(); time.sleep(0)

def trace(*args):
    info('trace:', *args)
