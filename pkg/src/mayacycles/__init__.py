"""Hermite-type rational solutions of dressing chains and Noumi-Yamada systems,
built from cyclic Maya diagrams with exact arithmetic."""

__version__ = "0.1.0"
