"""Conditioning laboratory for modulated wideband converter sign
patterns: family generators, quality measures, recovery guarantees,
Monte Carlo validation and a greedy support-recovery experiment.

Submodules import numpy; this top level stays import-free so the CLI
can pin thread environment variables first.
"""

__version__ = "0.1.0"
