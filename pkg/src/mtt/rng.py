"""Seeded PRNG used everywhere randomness is needed.

A fixed, documented generator (rather than ``random``) keeps partitions
and trained forests reproducible across interpreter versions and across
the compiled/pure-Python kernel backends, which re-implement the exact
same draw sequence.

Generator: xorshift64* (Marsaglia 2003 / Vigna 2016)
    state ^= state >> 12; state ^= state << 25; state ^= state >> 27
    output = state * 0x2545F4914F6CDD1D  (mod 2**64)
Seeding: the raw seed is passed through two rounds of the splitmix64
finalizer so that small consecutive seeds give unrelated streams.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
XS_MULT = 0x2545F4914F6CDD1D


def splitmix64(z: int) -> int:
    """One splitmix64 step: returns the mixed value of ``z + GOLDEN``."""
    z = (z + GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Derive the stream state for substream ``index`` of ``seed``.

    Used for per-tree and per-language RNG streams: the result depends
    only on (seed, index), so concurrent training stays deterministic.
    """
    return splitmix64(splitmix64(seed & MASK64) + ((index + 1) * GOLDEN & MASK64))


class Xorshift64Star:
    """xorshift64* stream; ``seed`` is mixed, a raw ``state`` is not."""

    __slots__ = ("state",)

    def __init__(self, seed: int = 0, *, state: int | None = None):
        if state is None:
            state = splitmix64(splitmix64(seed & MASK64))
        self.state = (state & MASK64) or GOLDEN  # zero is a fixed point

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * XS_MULT) & MASK64

    def randint(self, n: int) -> int:
        """Uniform integer in [0, n) by modulo reduction (documented bias)."""
        if n <= 0:
            raise ValueError("randint() needs n >= 1")
        return self.next_u64() % n

    def shuffle(self, items: list) -> None:
        """In-place backward Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_indices(self, n: int, k: int) -> list[int]:
        """First ``k`` entries of a forward partial Fisher-Yates over range(n).

        Consumes exactly ``k`` draws; used for split-candidate sampling.
        """
        pool = list(range(n))
        k = min(k, n)
        for i in range(k):
            j = i + self.randint(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
