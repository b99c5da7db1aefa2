"""Exact computations on Heisenberg-invariant quartic surfaces in P^3.

Submodules: exactalg (fields, polynomials, linear algebra), heisgroup,
family, kummer, kleinlines, conicconfig, lattice, acceptance and cli.
"""

__version__ = "0.1.0"
