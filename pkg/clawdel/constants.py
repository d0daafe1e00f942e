from __future__ import annotations

DEFAULT_T = 3

# oracle guards
ORACLE_MAX_DEPTH = 12
ENUMERATION_LIMIT = 14
EXHAUSTIVE_LIMIT = 12
VC_ADVISORY_LIMIT = 24

GEN_RETRY_CAP = 10_000
# CPython's random.Random (MT19937); recorded in every generated file header
PRNG_NAME = "mt19937"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_ORACLE = 3
EXIT_INFEASIBLE = 4
