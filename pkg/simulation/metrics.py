"""Reconstruction quality metrics."""
import math

from coding import ValueOutOfRangeException


def psnr(mse: float, maxval: int) -> float:
    """Return the peak signal-to-noise ratio 10*log10(maxval^2 / mse) in dB; math.inf if mse is 0."""
    if mse < 0:
        raise ValueOutOfRangeException('the mean squared error must not be negative, got {0}'.format(mse))
    if maxval <= 0:
        raise ValueOutOfRangeException('the peak value must be positive, got {0}'.format(maxval))

    if mse == 0:
        return math.inf
    return 10 * math.log10(maxval * maxval / mse)
