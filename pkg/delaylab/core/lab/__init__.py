from delaylab.core.lab.corpus import generate_corpus
from delaylab.core.lab.engine import PropertyEngine, constancy_witness
from delaylab.core.lab.theorems import TheoremSuite, run_theorem_suite

__all__ = ["PropertyEngine", "TheoremSuite", "constancy_witness", "generate_corpus", "run_theorem_suite"]
