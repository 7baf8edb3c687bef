class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class DegenerateStimulusError(ValueError):
    """A colour stimulus or activation set cannot be normalised (zero sum or zero Y)."""


class GridMismatchError(ValueError):
    """Spectral data sampled on a different wavelength grid than expected."""


class UnsupportedFormatError(ValueError):
    pass


class CorruptImageError(ValueError):
    pass
