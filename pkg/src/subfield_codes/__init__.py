"""Codes in the lambda-subfield metric over F_{q^m}."""

from .bounds import (
    BoundReport,
    average_weight_D,
    bound_report,
    bounds_csv,
    bounds_table,
    gilbert_varshamov_bound,
    gv_random_experiment,
    plotkin_distance_bound,
    plotkin_long_bound,
    plotkin_nonlinear_bound,
    plotkin_size_bound,
    singleton_bound_size,
    sphere_packing_bound,
)
from .codefile import CodeFile
from .codes import (
    AdditiveCode,
    BRDistanceSet,
    LinearCode,
    additive_code,
    all_codewords,
    br_distribution,
    cyclic_code,
    enumerate_codewords,
    from_generator,
    gabidulin_code,
    is_mlambda_d,
    min_hamming_distance,
    min_lambda_distance,
    mrd_density_experiment,
    restriction_to_subfield,
    trace_symplectic_dual,
)
from .decoding import (
    ChannelSpec,
    DecodeResult,
    SyndromeDecoder,
    correctable_br_profiles,
    decode_nearest,
    guaranteed_radius,
    simulate_channel,
    verify_unique_decoding,
)
from .enumerator import KrawtchoukMatrix, SubfieldEnumerator, enumerator_from_code, macwilliams_transform
from .gf import FieldElement, FieldSpec, build_field, format_vector, parse_element, parse_vector
from .metric import (
    BRWeight,
    br_distance,
    br_weight,
    hamming_weight,
    lambda_distance,
    lambda_weight,
    pareto_minima,
    rank_weight,
)
from .volume import asymptotic_ball_exponent, ball_size, saddle_rho, sphere_size

__version__ = "0.1.0"
