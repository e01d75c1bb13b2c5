"""Stieltjes constants, Hurwitz zeta and quadratic L-functions computed by
independent routes, with a harness that audits identities between them."""

__version__ = "0.1.0"
