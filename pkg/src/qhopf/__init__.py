"""Exact symbolic verification of quotient coalgebras and coinvariant
subalgebras for quantum groups presented by generators and relations."""

__version__ = "0.1.0"
