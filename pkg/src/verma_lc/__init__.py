"""Exact tools for log-concavity of highest weight characters.

Submodules: exact_poly, lorentz_cert, partition_fn, lie_structure,
hw_characters, flow_poly, symfun2, cli.
"""

__version__ = "0.1.0"
