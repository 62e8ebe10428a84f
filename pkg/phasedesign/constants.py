"""Tolerances and size limits shared across the toolkit."""

# Field arithmetic
GF_MAX_DEGREE = 64

# k-wise family
KWISE_EXHAUSTIVE_MAX_BITS = 16  # n * k for exhaustive independence checks

# State vectors
STATE_NORM_TOL = 1e-12

# Tuple-space enumeration and moment matrices
ENUMERATION_MAX_BITS = 16  # t * n
SPECTRAL_MAX_BITS = 12  # t * n for full spectral verification
DENSE_MAX_DIM = 4096
HAAR_MAX_T = 8
HAAR_MAX_WORK = 1 << 26  # t! * dim permutation-operator entries
ORACLE_MAX_ASSIGNMENTS = 1 << 22  # d ** m phase assignments
MATRIX_MAX_NNZ = 1 << 26  # stored entries of a sparse moment matrix

# Numerical tolerances
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
RANK_TOL = 1e-9
EIG_TOL = 1e-10
DISTANCE_TOL = 1e-9
SINGULAR_TOL = 1e-12
SPECTRUM_SUM_TOL = 1e-9

# Circuits
SIM_MAX_SUPERPOSED_QUBITS = 20
SIM_MAX_QUBITS = 1 << 16
SIM_MAX_CELLS = 1 << 27  # branches * qubits in the bit table
SIM_AMPLITUDE_TOL = 1e-10
KWISE_CIRCUIT_MAX_N = 16
KWISE_CIRCUIT_MAX_K = 64

# Defaults for the command line
DEFAULT_SEED = 0
DEFAULT_LOG_LEVEL = "INFO"
