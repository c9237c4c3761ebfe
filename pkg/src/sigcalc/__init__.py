"""sigcalc: ordinals below epsilon_0, oscillation signatures, and their
exact piecewise-linear realizations."""

from . import ordinal, signature, normalizer, realization

__version__ = "0.1.0"
