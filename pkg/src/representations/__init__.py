from .matrices import EchelonBasis, Matrix, encode_matrix, format_matrix, is_irreducible, span_dimension
from .reps import (
    Character,
    MatrixRep,
    Mode,
    act_on_vector,
    cyclic_shift,
    evaluate_character,
    evaluate_rep,
    make_character,
    make_rep,
)
from .averaging import AvgSequence, averaging_sequence, avg_act_x, avg_act_y, x_power_is_scalar
from .separation import gamma_candidates, separate
