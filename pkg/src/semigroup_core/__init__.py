from .semigroup import (
    SemigroupElement,
    format_monomial,
    invert,
    multiply,
    product_of,
    word_of,
    word_to_normal_form,
)
