from .cyclotomic import (
    BigRational,
    Cyclotomic,
    as_cyclotomic,
    as_root_plus_rational,
    common_conductor,
    cyclotomic_polynomial,
    decode_cyclotomic,
    encode_cyclotomic,
    format_cyclotomic,
    format_root_form,
)
