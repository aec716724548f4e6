"""Thresholding reconstruction: fall back to the prediction if the decoded value deviates too much."""
import numpy as np

from coding import ConfigurationException


def threshold_reconstruct(decoded_value: int, predicted: int, threshold: int) -> int:
    """Return the prediction if |decoded_value - predicted| > threshold, else the decoded value."""
    if threshold < 0:
        raise ConfigurationException('threshold', 'must not be negative, got {0}'.format(threshold))

    return predicted if abs(decoded_value - predicted) > threshold else decoded_value


def threshold_array(decoded_values: np.ndarray, predicted: np.ndarray, threshold: int) -> np.ndarray:
    """Vectorized `threshold_reconstruct`."""
    if threshold < 0:
        raise ConfigurationException('threshold', 'must not be negative, got {0}'.format(threshold))

    return np.where(np.abs(decoded_values - predicted) > threshold, predicted, decoded_values)
