from .bounds import entry_probability, required_k, tight_k, separation_probability, traditional_reference
from .randomized import (
    ConstructionParams,
    ConstructionResult,
    SIZE_RULES,
    attempt_generator,
    randomized_construct,
)
from .bruteforce import optimal_bruteforce
