"""Fixed RANMAR parameters (Marsaglia-Zaman-Tsang, as used by LAMMPS)."""

R = 97  # long lag
S = 33  # short lag
E = 24  # bits of precision
M = 1 << E  # 2^24, lagged Fibonacci modulus
MASK = M - 1
MOD = M - 3  # 16777213, prime modulus of the arithmetic sequence
D0 = 7654321  # arithmetic-sequence decrement numerator
C0 = 362436  # initial arithmetic-sequence numerator
STEP_ADD = MOD - D0  # v + STEP_ADD == v - D0 (mod MOD)

SCALE = 1.0 / M  # 2^-24, exact in binary64

SEED_MAX = 900_000_000
