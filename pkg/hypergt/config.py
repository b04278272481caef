"""
Configuration Module

Default caps and parameters for generation, construction, search and the
benchmark harness. The CLI overrides these per invocation.
"""
from dataclasses import dataclass


@dataclass
class GeneratorConfig:
    """Instance generation limits."""
    MAX_EDGES: int = 10**6  # global cap on enumerated edges


@dataclass
class ConstructionConfig:
    """Randomized construction defaults."""
    ALPHA: float = 3.0
    MAX_ATTEMPTS: int = 100
    EXACT_BETA_MAX_EDGES: int = 5000  # above this the CLI may sample beta
    BETA_SAMPLES: int = 200000


@dataclass
class BruteForceConfig:
    """Hard caps for the exhaustive optimal solver (the problem is NP-hard)."""
    MAX_VERTICES: int = 16
    MAX_EDGES: int = 64


@dataclass
class AdaptiveConfig:
    """Adaptive identification fallback parameters."""
    FALLBACK_ALPHA: float = 3.0
    FALLBACK_ATTEMPTS: int = 100


@dataclass
class BenchConfig:
    """Benchmark harness settings."""
    NUM_WORKERS: int = 1
    OPTIMAL_K_MAX: int = 6
