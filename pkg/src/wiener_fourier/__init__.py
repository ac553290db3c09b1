from .wiener import (
    CoeffSeq,
    convergence_depth,
    encode_sequence,
    faithfulness_witness,
    format_sequence,
    left_act,
    map_to_delta0,
    pairing,
    parse_sequence,
    right_act,
    wiener_product,
)
