"""Exact computations in Kauffman bracket skein modules of D^2(k1, k2) and S^2(k1, k2, k3)."""

from __future__ import annotations

__version__ = "0.1.0"
