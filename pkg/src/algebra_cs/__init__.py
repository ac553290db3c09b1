from .algebra import (
    AlgebraElement,
    LaurentPoly,
    decode_element,
    encode_element,
    extract_phi,
    format_element,
    graded_parts,
    min_grid_size,
    norm_A,
    norm_B,
    product,
)
from .parser import parse_element, parse_scalar
