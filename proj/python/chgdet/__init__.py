"""Deformed Fredholm determinants of the sine / type-I Bessel / confluent
hypergeometric kernels: Nystrom determinants and spectra, Fisher-Hartwig
constants h_k, closed-form gap asymptotics, Riemann-Hilbert residuals."""

from _chgdet import *  # noqa: F401,F403
