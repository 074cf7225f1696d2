"""Small helpers for element sets encoded as int bitmasks."""


def bits(mask):
    """Iterate set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(items):
    """Bitmask with the given positions set."""
    m = 0
    for i in items:
        m |= 1 << i
    return m


def full_mask(n):
    return (1 << n) - 1
