"""Exact identity certificates behind the solver."""

from ._runner import REGISTRY, format_table, run_certificates

__all__ = ["REGISTRY", "format_table", "run_certificates"]
