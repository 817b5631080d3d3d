MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea and Flood).

    The state advances by 0x9E3779B97F4A7C15 and every output is the state
    passed through the mix13 finalizer, so any implementation of the
    published algorithm reproduces the same stream from the same seed.
    """

    GOLDEN_GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + self.GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self):
        """Uniform float in [0, 1) from the top 53 bits"""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randrange(self, bound):
        """Uniform integer in [0, bound).

        Bounds up to 2^64 use one word per draw. Larger bounds concatenate
        as many words as they need, lowest word first. Draws from the biased
        tail of the word range are rejected.
        """
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        words = max(1, ((bound - 1).bit_length() + 63) // 64)
        space = 1 << (64 * words)
        limit = space - (space % bound)
        while True:
            value = 0
            for i in range(words):
                value |= self.next_u64() << (64 * i)
            if value < limit:
                return value % bound

    def shuffle(self, items):
        """In-place Fisher-Yates, swapping from the end"""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n):
        items = list(range(n))
        self.shuffle(items)
        return items

    def nonempty_subset(self, k):
        """Uniform non-empty subset of 1..k, sorted"""
        mask = 1 + self.randrange((1 << k) - 1)
        return [c for c in range(1, k + 1) if mask >> (c - 1) & 1]
