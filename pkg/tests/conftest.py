import random

import pytest

from cantor_swaps.address import addresses_of_length, incomparable, swap_address_action

SHORT = [a for n in range(1, 4) for a in addresses_of_length(n)]
SWAPS_UP_TO_3 = [(a, b) for a in SHORT for b in SHORT if incomparable(a, b)]

ABC_SWAPS = {
    "a": [("00", "01")],
    "b": [("01", "10"), ("01", "11")],
    "c": [("1", "00")],
}
UV_SWAPS = {
    "u": [("00", "01"), ("10", "110"), ("10", "111")],
    "v": ABC_SWAPS["b"],
}


def act_swaps(point, swaps):
    """Push a long point through swaps one at a time (no tables involved)."""
    for a, b in swaps:
        point = swap_address_action(point, a, b)
        assert point is not None, "oracle point too short"
    return point


def word_swaps(word, images):
    """Flattened word over named generators -> list of swap pairs."""
    out = []
    for g, e in word:
        seq = images[g] if isinstance(g, str) else [(g.alpha, g.beta)]
        out += seq if e == 1 else seq[::-1]
    return out


def oracle_points(depth=10, count=64, seed=0):
    rng = random.Random(seed)
    return ["".join(rng.choice("01") for _ in range(depth)) for _ in range(count)]


def random_swap(rng, max_len=3):
    while True:
        a = "".join(rng.choice("01") for _ in range(rng.randint(1, max_len)))
        b = "".join(rng.choice("01") for _ in range(rng.randint(1, max_len)))
        if incomparable(a, b):
            return a, b


def random_swap_list(rng, n, max_len=3):
    return [random_swap(rng, max_len) for _ in range(n)]


@pytest.fixture
def rng():
    return random.Random(20240611)
