"""Crystal bases of type A_n: tableau, polyhedral and Gelfand-Tsetlin models.

Everything is exact integer arithmetic.  Weights are tuples of length n+1
in the epsilon basis.
"""

from .bridges import (
    LusztigData,
    chi_of_mlt,
    gt_of_rssyt,
    in_ml_image,
    lambda_sequences,
    lowest_vector,
    lusztig_data,
    ml_embed,
    mlt_of_lusztig,
    pl_map,
    psi_infty,
    psi_infty_inv,
    psi_lambda,
    psi_lambda_inv,
    rho_poly_infty,
    rho_poly_lambda,
    rssyt_of_gt,
    theta_r,
    verify_diagram,
    xi,
)
from .cartan_an import (
    DomainError,
    alpha,
    from_fundamental,
    omega,
    pairing,
    partition,
    partitions,
    tau,
    w0,
    weyl_dim,
)
from .crystal_core import (
    MINUS_INFINITY,
    Crystal,
    CrystalGraph,
    ElementStats,
    InternalConsistencyError,
    NodeCapExceeded,
    Report,
    RLambda,
    RLambdaCrystal,
    TensorCrystal,
    check_axioms,
    check_morphism,
    generate_graph,
    graph_isomorphic,
    relabel_colors,
)
from .gt import GTCrystal, GTPattern, enumerate_gt, varsigma, varsigma_inv
from .mlt import MLT, MLTCrystal, materialize, t_infinity
from .polyhedral import (
    BInfinityPoly,
    BLambdaPoly,
    PolyVector,
    enumerate_sigma_lambda,
    in_sigma,
    in_sigma_lambda,
    sigma_i_max,
    zero_vector,
)
from .reverse_models import (
    RMLT,
    RSSYT,
    RMLTCrystal,
    RSSYTCrystal,
    eta,
    eta_inv,
    phi_inv,
    phi_map,
    rho_infinity,
    rssyt_evacuation,
    rssyt_highest,
    rssyt_lowest,
    zero_rmlt,
)
from .serialize import ParseError, from_json, to_dot, to_json
from .ssyt import (
    SSYT,
    SSYTCrystal,
    enumerate_ssyt,
    evacuation,
    highest_tableau,
    jdt_rectify,
    lowest_tableau,
    rho_lambda_word,
)

__all__ = [
    "MINUS_INFINITY",
    "MLT",
    "RMLT",
    "RSSYT",
    "SSYT",
    "BInfinityPoly",
    "BLambdaPoly",
    "Crystal",
    "CrystalGraph",
    "DomainError",
    "ElementStats",
    "GTCrystal",
    "GTPattern",
    "InternalConsistencyError",
    "LusztigData",
    "MLTCrystal",
    "NodeCapExceeded",
    "ParseError",
    "PolyVector",
    "RLambda",
    "RLambdaCrystal",
    "RMLTCrystal",
    "RSSYTCrystal",
    "Report",
    "SSYTCrystal",
    "TensorCrystal",
    "alpha",
    "check_axioms",
    "check_morphism",
    "chi_of_mlt",
    "enumerate_gt",
    "enumerate_sigma_lambda",
    "enumerate_ssyt",
    "eta",
    "eta_inv",
    "evacuation",
    "from_fundamental",
    "from_json",
    "generate_graph",
    "graph_isomorphic",
    "gt_of_rssyt",
    "highest_tableau",
    "in_ml_image",
    "in_sigma",
    "in_sigma_lambda",
    "jdt_rectify",
    "lambda_sequences",
    "lowest_tableau",
    "lowest_vector",
    "lusztig_data",
    "materialize",
    "ml_embed",
    "mlt_of_lusztig",
    "omega",
    "pairing",
    "partition",
    "partitions",
    "phi_inv",
    "phi_map",
    "pl_map",
    "psi_infty",
    "psi_infty_inv",
    "psi_lambda",
    "psi_lambda_inv",
    "relabel_colors",
    "rho_infinity",
    "rho_lambda_word",
    "rho_poly_infty",
    "rho_poly_lambda",
    "rssyt_evacuation",
    "rssyt_highest",
    "rssyt_lowest",
    "rssyt_of_gt",
    "sigma_i_max",
    "t_infinity",
    "tau",
    "theta_r",
    "to_dot",
    "to_json",
    "varsigma",
    "varsigma_inv",
    "verify_diagram",
    "w0",
    "weyl_dim",
    "xi",
    "zero_rmlt",
    "zero_vector",
]
