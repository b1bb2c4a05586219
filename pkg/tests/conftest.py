import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def signatures(max_entry, max_len, min_len=1):
    """Sorted multisets of chain moduli."""
    for k in range(min_len, max_len + 1):
        yield from itertools.combinations_with_replacement(range(1, max_entry + 1), k)


def carrier_size(sig):
    out = 1
    for n in sig:
        out *= n + 1
    return out
