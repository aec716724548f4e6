"""Bit flip channel standing in for failed error correction."""
import numpy as np

from coding import Codeword
from .models import ChannelModel


def flip_masks(channel: ChannelModel, width: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """Return `size` flip masks of `width` bits drawn from the channel model."""
    weights = np.int64(1) << np.arange(width, dtype=np.int64)

    if channel.kind == 'iid-bitflip':
        flips = rng.random((size, width)) < channel.p_flip
    elif channel.kind == 'at-most-m-flips':
        counts = rng.choice(len(channel.flip_counts), size=size, p=np.asarray(channel.flip_counts, dtype=float))
        # The rank of uniform keys is a uniformly random permutation of the bit positions.
        ranks = rng.random((size, width)).argsort(axis=1).argsort(axis=1)
        flips = ranks < counts[:, None]
    else:
        raise ValueError('unknown channel {0!r}'.format(channel.kind))

    return (flips * weights).sum(axis=1)


def flip_bits(cw: Codeword, channel: ChannelModel, rng: np.random.Generator) -> Codeword:
    """Return the codeword with the bits flipped that the channel model draws."""
    assert isinstance(cw, Codeword)

    return cw.flip(int(flip_masks(channel, cw.width, 1, rng)[0]))
