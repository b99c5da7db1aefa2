"""Exact coefficient arithmetic and polynomial algebra."""

from .field import (
    QQ,
    FieldElement,
    TowerField,
    adjoin_sqrt,
    gaussian_tower,
    rational_sqrt,
    sqrt_in_field,
    squarefree_part,
    zeta8_tower,
)
from .poly import (
    MPoly,
    binary_form_roots_count,
    perfect_square_root,
    plane_parameterization,
    point_in_plane_coords,
    poly_det,
    poly_det4,
    restrict_to_plane,
    univ_from_coeffs,
    univ_gcd,
    univ_squarefree_part,
    xyzw,
)
