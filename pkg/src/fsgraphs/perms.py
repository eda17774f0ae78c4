"""Permutations of [n] as image tuples.

``s[i - 1]`` is the image of i.  Composition is right-to-left:
``compose(s, p)(x) = s(p(x))``, so ``swap(s, i, j) == compose(s, transposition)``
is s with the entries at positions i and j exchanged.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

import numpy as np

Perm = tuple[int, ...]


class PermutationError(ValueError):
    pass


def check(s: Sequence[int]) -> Perm:
    s = tuple(int(x) for x in s)
    if sorted(s) != list(range(1, len(s) + 1)):
        raise PermutationError(f"{list(s)} is not a permutation of 1..{len(s)}")
    return s


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def transposition(n: int, i: int, j: int) -> Perm:
    s = list(range(1, n + 1))
    s[i - 1], s[j - 1] = j, i
    return tuple(s)


def compose(s: Sequence[int], p: Sequence[int]) -> Perm:
    if len(s) != len(p):
        raise PermutationError(f"length mismatch {len(s)} != {len(p)}")
    return tuple(s[x - 1] for x in p)


def swap(s: Sequence[int], i: int, j: int) -> Perm:
    """s o (i j): exchange the images at positions i and j."""
    t = list(s)
    t[i - 1], t[j - 1] = t[j - 1], t[i - 1]
    return tuple(t)


def inverse(s: Sequence[int]) -> Perm:
    inv = [0] * len(s)
    for i, x in enumerate(s, 1):
        inv[x - 1] = i
    return tuple(inv)


def sign(s: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd, from the cycle count."""
    n = len(s)
    seen = [False] * (n + 1)
    cycles = 0
    for i in range(1, n + 1):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = s[j - 1]
    return -1 if (n - cycles) % 2 else 1


def rank(s: Sequence[int]) -> int:
    """Lexicographic rank via the Lehmer code; identity is 0."""
    n = len(s)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if s[j] < s[i])
        r += smaller * math.factorial(n - 1 - i)
    return r


def unrank(code: int, n: int) -> Perm:
    if not 0 <= code < math.factorial(n):
        raise PermutationError(f"rank {code} out of range for n={n}")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n - 1, -1, -1):
        d, code = divmod(code, math.factorial(i))
        out.append(pool.pop(d))
    return tuple(out)


def parse(text: str) -> Perm:
    """Accept ``[3,1,2]``, ``3,1,2``, ``3 1 2`` or ``312`` (n <= 9)."""
    t = text.strip().strip("[]()")
    if "," in t or " " in t:
        parts = [x for x in t.replace(",", " ").split() if x]
    else:
        parts = list(t)
    try:
        return check(int(x) for x in parts)
    except ValueError as exc:
        raise PermutationError(f"cannot parse permutation {text!r}: {exc}") from None


def fmt(s: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in s) + "]"


# ---------------------------------------------------------------------------
# dense tables for whole-space work

@lru_cache(maxsize=4)
def all_perms(n: int) -> np.ndarray:
    """All n! permutations (values 1..n, int8) in rank order, shape (n!, n)."""
    total = math.factorial(n)
    codes = np.arange(total, dtype=np.int64)
    pool = np.tile(np.arange(1, n + 1, dtype=np.int8), (total, 1))
    out = np.empty((total, n), dtype=np.int8)
    rows = np.arange(total)
    for i in range(n):
        f = math.factorial(n - 1 - i)
        digit = codes // f
        codes = codes % f
        out[:, i] = pool[rows, digit]
        # drop the chosen entry: shift everything right of it one step left
        width = n - i
        if width > 1:
            cols = np.arange(width - 1)
            src = cols[None, :] + (cols[None, :] >= digit[:, None])
            pool = pool[rows[:, None], src]
    out.flags.writeable = False
    return out


def place_weights(n: int) -> np.ndarray:
    """Weights w with key(s) = sum (s[i]-1) * w[i] monotone in lexicographic order."""
    return n ** np.arange(n - 1, -1, -1, dtype=np.int64)


@lru_cache(maxsize=4)
def all_keys(n: int) -> np.ndarray:
    """Sorted integer keys of all_perms(n); ranks are found by searchsorted."""
    keys = (all_perms(n).astype(np.int64) - 1) @ place_weights(n)
    keys.flags.writeable = False
    return keys


def ranks_of(perms: np.ndarray) -> np.ndarray:
    n = perms.shape[1]
    keys = (perms.astype(np.int64) - 1) @ place_weights(n)
    return np.searchsorted(all_keys(n), keys)
