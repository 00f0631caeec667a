"""Turn words over the alphabet {L, R} and their integer growth laws.

The word family is generated by concatenating the two previous words,
letter-swapping the older factor on two out of every three steps.  Word
lengths then follow the Fibonacci recurrence, and the bounding square of
the traced snowflake follows the Pell recurrence.
"""

from __future__ import annotations

import math

#: Largest generation index for which words are materialized (~100 MB of text).
WORD_CAP = 40

#: Largest snowflake order accepted by default; order n repeats the word of
#: generation 3n + 1 four times.
SNOWFLAKE_CAP = 12

_SWAP = str.maketrans("LR", "RL")


def complement(word: str) -> str:
    """Swap every L for an R and vice versa."""
    return word.translate(_SWAP)


def fibonacci_word(n: int, cap: int = WORD_CAP) -> str:
    """Return the generation-n turn word.

    Generation 0 is the empty word and generation 1 is ``"R"``.  Each later
    word is the previous one followed by the one before that, with the older
    factor letter-swapped except when the generation index is 2 mod 3.
    """
    _check_order(n, cap)
    if n == 0:
        return ""
    prev2, prev = "", "R"
    for k in range(2, n + 1):
        tail = prev2 if k % 3 == 2 else complement(prev2)
        prev2, prev = prev, prev + tail
    return prev


def snowflake_word(n: int, cap: int = SNOWFLAKE_CAP) -> str:
    """Boundary word of the order-n snowflake.

    The generation 3n + 1 word is repeated four times and the final letter
    dropped, which closes the traced polygon.
    """
    _check_order(n, cap)
    q = fibonacci_word(3 * n + 1, cap=3 * cap + 1)
    return (q * 4)[:-1]


def fib_length(n: int) -> int:
    """Length of the generation-n word: 0, 1, 1, 2, 3, 5, ..."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def pell(n: int) -> int:
    """n-th Pell number: 0, 1, 2, 5, 12, 29, ..."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def closed_forms(n: int) -> tuple[float, float]:
    """Evaluate the Binet-style closed forms at index n.

    Returns ``(word length, Pell number P(n + 1))`` as floats.  Both agree
    with the integer recurrences to relative error 1e-9 for n <= 40.
    """
    _check_order(n, WORD_CAP)
    sqrt5 = math.sqrt(5.0)
    phi = (1.0 + sqrt5) / 2.0
    psi = (1.0 - sqrt5) / 2.0
    fib_real = (phi**n - psi**n) / sqrt5

    sqrt2 = math.sqrt(2.0)
    pell_real = (2.0 + sqrt2) / 4.0 * (1.0 + sqrt2) ** n + (2.0 - sqrt2) / 4.0 * (
        1.0 - sqrt2
    ) ** n
    return fib_real, pell_real


def _check_order(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if n > cap:
        raise ValueError(f"order {n} exceeds the cap of {cap}")
