"""Exact copositivity decisions and short non-copositivity certificates for
symmetric integer matrices."""
from .certificate import (
    CertificateReport,
    certify_noncopositive,
    dyadic_certificate,
    measured_complexity,
    round_certificate,
    scale_optimal,
    verify_certificate,
)
from .core import (
    EncodingStats,
    SymmetricIntMatrix,
    encode_bits,
    encoding_length,
    gamma_threshold,
    quadratic_form,
)
from .families import certificate_interval_check, embed, random_instance, remark_b_matrix
from .lcp import (
    ComplementarySolution,
    LcpSystem,
    MinimizationResult,
    build_system,
    check_basis_determinant_bound,
    enumerate_complementary_solutions,
    kkt_witness,
    purify_to_bfs,
    solve_box_qp_lcp,
)
from .oracle import face_enumerate_min, is_copositive

__version__ = "0.1.0"
