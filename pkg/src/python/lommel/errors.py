###########################################################################
#  This file is part of lommel, and is licensed under EITHER the MIT license
#  or the Apache 2.0 license, at your option.
#
#      http://www.apache.org/licenses/LICENSE-2.0
#      http://opensource.org/licenses/MIT
###########################################################################

__doc__ = """
Exceptions raised by the ``lommel`` package.

Everything derives from ``LommelError`` so that the CLI can map a failure to
an exit code by class.  Plain misuse (wrong types, negative indices) raises
the builtin ``TypeError``/``ValueError`` instead.
"""

class LommelError(Exception):
    pass

class ExcludedCase(LommelError):
    """
    The defining series of s_{mu,nu} is undefined because
    ``nu**2 == (mu + 2*k + 1)**2`` for some ``k >= 0``.
    """
    def __init__(self, k, mu, nu):
        super().__init__(f'nu^2 = (mu + 2k + 1)^2 with k = {k} (mu = {mu!r}, nu = {nu!r})')
        self.k = k
        self.mu = mu
        self.nu = nu

class PoleError(LommelError):
    """ A Gamma function or a product denominator hit a pole. """

class DomainError(LommelError):
    """ The arguments lie outside the region where a representation is valid. """

class ExcludedIndex(LommelError):
    """ An approximant index pair is excluded, or its construction chain crosses one. """

class NonConvergence(LommelError):
    """ A series, quadrature or root iteration ran out of its step budget. """

class ReconciliationError(LommelError):
    """ Two independent construction paths disagreed. """

# exit codes used by the CLI
INVALID_PARAMETER_ERRORS = (ExcludedCase, PoleError, DomainError, ExcludedIndex)
