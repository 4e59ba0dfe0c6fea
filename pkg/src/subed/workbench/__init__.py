from .generators import GeneratorSpec, audit, generate
from .runner import RECORD_SCHEMA, run_experiment

__all__ = ["GeneratorSpec", "RECORD_SCHEMA", "audit", "generate", "run_experiment"]
