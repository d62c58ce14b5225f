"""Log-gas electrostatics, QHJ quantization, and Gaussian ensembles."""

from ._core import (
    BoundState,
    ExceptionalSolution,
    Interval,
    ParameterError,
    Potential,
    QuantizationError,
    SingularConfigError,
    __version__,
    drift,
    equilibrium,
    evolve,
    gas_energy,
    gas_gradient,
    hermite_roots,
    jacobi_roots,
    joint_log_pdf,
    ks_distance,
    laguerre_roots,
    polynomial_spectrum,
    product_wavefunction,
    sample_eigenvalues,
    solve_exceptional,
    stieltjes_identity_check,
)

__all__ = [
    "BoundState",
    "ExceptionalSolution",
    "Interval",
    "ParameterError",
    "Potential",
    "QuantizationError",
    "SingularConfigError",
    "__version__",
    "drift",
    "equilibrium",
    "evolve",
    "gas_energy",
    "gas_gradient",
    "hermite_roots",
    "jacobi_roots",
    "joint_log_pdf",
    "ks_distance",
    "laguerre_roots",
    "polynomial_spectrum",
    "product_wavefunction",
    "sample_eigenvalues",
    "solve_exceptional",
    "stieltjes_identity_check",
]
