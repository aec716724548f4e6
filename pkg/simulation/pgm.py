"""Read 8-bit grayscale images in the plain (P2) or binary (P5) PGM format into numpy arrays."""
import logging
import re
from typing import List, NamedTuple, Tuple

import numpy as np

from coding import ConfigurationException, ImageFormatException

_token = re.compile(rb'\s*(#[^\n]*\n\s*)*(\S+)')


def _header(data: bytes) -> Tuple[List[int], int]:
    """Return magic number, width, height and maxval (magic as 2 or 5) and the offset of the pixel data."""
    values = []
    position = 0
    for _ in range(4):
        match = _token.match(data, position)
        if match is None:
            raise ImageFormatException('truncated PGM header')
        values.append(match.group(2))
        position = match.end()

    magic = values[0]
    if magic not in (b'P2', b'P5'):
        raise ImageFormatException('PGM file type must be P2 or P5, got {0!r}'.format(magic))
    try:
        width, height, maxval = (int(v) for v in values[1:])
    except ValueError:
        raise ImageFormatException('invalid PGM header {0!r}'.format(values))

    # Exactly one whitespace character separates the header from binary pixel data.
    return [int(magic[1:]), width, height, maxval], position + 1


class PgmImage(NamedTuple):
    """Pixels of a PGM file together with the maximum gray value of its header."""
    pixels: np.ndarray
    maxval: int

    @property
    def depth(self) -> int:
        """Number of bits per pixel implied by maxval."""
        return self.maxval.bit_length()


def read_pgm(filename: str) -> PgmImage:
    """Return the pixels of an 8-bit PGM file as (height, width) array with the header's maxval."""
    try:
        with open(filename, 'rb') as f:
            data = f.read()
    except OSError as e:
        raise ImageFormatException('cannot read PGM file {0}: {1}'.format(filename, e.strerror))

    (kind, width, height, maxval), offset = _header(data)
    if not 0 < maxval <= 255:
        raise ImageFormatException('only 8-bit PGM files are supported, maxval is {0}'.format(maxval))

    if kind == 5:
        if len(data) < offset + width * height:
            raise ImageFormatException('PGM pixel data is truncated')
        pixels = np.frombuffer(data, dtype=np.uint8, count=width * height, offset=offset)
    else:
        text = re.sub(rb'#[^\n]*', b'', data[offset - 1:])
        try:
            pixels = np.array(text.split(), dtype=np.int64)
        except ValueError:
            raise ImageFormatException('PGM pixel data must be decimal numbers')
        if len(pixels) != width * height:
            raise ImageFormatException('expected {0} pixels, got {1}'.format(width * height, len(pixels)))

    pixels = pixels.astype(np.int64).reshape(height, width)
    if pixels.size and (pixels.min() < 0 or pixels.max() > maxval):
        raise ImageFormatException('PGM pixels must be in 0..{0}, got {1}..{2}'.format(maxval, pixels.min(),
                                                                                       pixels.max()))

    logging.debug('Read P%d image %s with %dx%d pixels and maxval %d', kind, filename, width, height, maxval)
    return PgmImage(pixels, maxval)


def requantize(pixels: np.ndarray, n: int, depth: int = 8) -> np.ndarray:
    """Return depth-bit pixels reduced to n bits by dropping the low bits."""
    if n > depth:
        raise ConfigurationException('image', 'cannot requantize {0}-bit pixels to {1} bits'.format(depth, n))
    return pixels >> (depth - n)
