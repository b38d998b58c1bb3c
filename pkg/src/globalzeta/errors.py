"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An input falls outside an operation's declared domain."""


class PoleError(ValueError):
    """An evaluation point lies within the pole-exclusion radius of a pole."""


class SymmetryError(ValueError):
    """L-polynomial coefficients violate the symmetry a[2g-i] = q^(g-i) * a[i]."""


class WeilBoundWarning(UserWarning):
    """Point counts imply coefficients outside the Weil bound; diagnostic only."""
