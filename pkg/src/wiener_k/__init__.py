from .restriction import (
    FnOnK,
    act_on_K,
    cyclic_inverse_element,
    encode_fn_on_k,
    format_fn_on_k,
    function_from_values,
    interpolate_on_K,
    invert_on_K,
    multiply_on_K,
    restrict,
    spectrum_on_K,
)
