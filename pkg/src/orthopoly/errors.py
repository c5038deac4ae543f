"""Exception hierarchy.

Every domain failure derives from :class:`GeometryError`, which the CLI maps
to exit status 1.
"""


class GeometryError(ValueError):
    """Base class for invalid geometric input or failed constructions."""


class AngleOutOfRange(GeometryError):
    def __init__(self, index, value=None):
        self.index = index
        self.value = value
        super().__init__(f"angle {index + 1} is outside (0, pi): {value}")


class SumNotTwoPi(GeometryError):
    def __init__(self, actual):
        self.actual = actual
        super().__init__(f"angles sum to {actual} (in units of pi), expected 2")


class TooFewAngles(GeometryError):
    def __init__(self, count):
        self.count = count
        super().__init__(f"need at least 3 angles, got {count}")


class DegenerateConsecutive(GeometryError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"slopes {index} and {index + 1} define the same line")


class UnwrapNotTwoPi(GeometryError):
    def __init__(self, total):
        self.total = total
        super().__init__(f"unwrapped normal directions turn by {total} rad, expected 2*pi")


class NotSymmetric(GeometryError):
    def __init__(self, asymmetry):
        self.asymmetry = asymmetry
        super().__init__(f"matrix is not symmetric/Hermitian (defect {asymmetry:.3g})")


class NotConvex(GeometryError):
    def __init__(self, index, length=None):
        self.index = index
        self.length = length
        super().__init__(f"edge {index + 1} has non-positive length {length}")


class WrongDimension(GeometryError):
    def __init__(self, n, expected):
        self.n = n
        super().__init__(f"dimension n={n}, this check needs n={expected}")


class DimensionTooSmall(GeometryError):
    def __init__(self, n, minimum=2):
        self.n = n
        super().__init__(f"dimension n={n} is below {minimum}; the orthoscheme is degenerate")


class RepeatedDirection(GeometryError):
    def __init__(self):
        super().__init__("cross-ratio needs four distinct line directions")


class NotNapier(GeometryError):
    pass


class NoSolutionForSeed(GeometryError):
    pass


class TripleSumNotBelowPi(GeometryError):
    def __init__(self, total):
        self.total = total
        super().__init__(f"triple sums to {total} (units of pi); a stratum needs < 1")


class RatioOutOfRange(GeometryError):
    def __init__(self, ratio):
        self.ratio = ratio
        super().__init__(f"squared-cosine ratio {ratio!r} exceeds 1 for a stratum triple")


class OriginNotInterior(GeometryError):
    def __init__(self, index, height):
        self.index = index
        super().__init__(f"height {index + 1} is {height}; the origin must be interior")
