"""Side-information predictor: the original value plus a random prediction error."""
import numpy as np
from scipy import stats

from .models import PredictionModel


def offset_distribution(model: PredictionModel):
    """Return the frozen scipy distribution of the (unclamped) prediction error."""
    if model.kind == 'exact' or model.scale == 0:
        return stats.randint(0, 1)
    if model.kind == 'uniform-offset':
        bound = int(model.scale)
        return stats.randint(-bound, bound + 1)
    if model.kind == 'discrete-laplacian':
        return stats.dlaplace(1 / model.scale)
    raise ValueError('unknown prediction model {0!r}'.format(model.kind))


def sample_offsets(model: PredictionModel, size: int, rng: np.random.Generator) -> np.ndarray:
    """Return `size` prediction errors drawn from the model."""
    return np.asarray(offset_distribution(model).rvs(size=size, random_state=rng), dtype=np.int64).reshape(size)


def predict_array(originals: np.ndarray, model: PredictionModel, maxval: int, rng: np.random.Generator) -> np.ndarray:
    """Return predictions for all originals, clamped to 0..maxval."""
    return np.clip(originals + sample_offsets(model, len(originals), rng), 0, maxval)


def predict(original: int, model: PredictionModel, maxval: int, rng: np.random.Generator) -> int:
    """Return a prediction of the original value, clamped to 0..maxval."""
    assert 0 <= original <= maxval

    return int(predict_array(np.array([original], dtype=np.int64), model, maxval, rng)[0])


def mean_absolute_offset(model: PredictionModel, original: int, maxval: int) -> float:
    """Return the expected |prediction - original| after clamping to 0..maxval."""
    distribution = offset_distribution(model)
    low, high = -original, maxval - original

    inner = np.arange(low + 1, high)
    mean = float(np.sum(np.abs(inner) * distribution.pmf(inner)))
    # Everything at or beyond a boundary is clamped onto it.
    mean += -low * distribution.cdf(low)
    mean += high * distribution.sf(high - 1)
    return mean
