"""Contains all the exceptions thrown by the coding, analysis and simulation modules."""


class CodingException(Exception):
    """The base exception every other exception bases on."""

    pass


class WidthOutOfRangeException(CodingException, ValueError):
    """Exception thrown if a bit width is outside of the supported range."""

    pass


class ValueOutOfRangeException(CodingException, ValueError):
    """Exception thrown if a pixel value cannot be represented with the given width."""

    pass


class WidthMismatchException(CodingException, ValueError):
    """Exception thrown if two codewords (or a codeword and a table) do not have the same width."""

    pass


class NotACountingSequenceException(CodingException, ValueError):
    """Exception thrown if a sequence does not visit every n-tuple exactly once."""

    pass


class SearchSpaceException(CodingException, ValueError):
    """Exception thrown if an exhaustive search is requested outside of its feasible parameters."""

    pass


class ConfigurationException(CodingException, ValueError):
    """Exception thrown for invalid configuration values.

    The name of the offending field is available as `field`.
    """

    def __init__(self, field: str, message: str):
        """Initialize the exception with the field name and a message."""
        super(ConfigurationException, self).__init__('{field}: {message}'.format(field=field, message=message))
        self.field = field


class ImageFormatException(CodingException, ValueError):
    """Exception thrown if an image file cannot be read as 8-bit PGM."""

    pass
