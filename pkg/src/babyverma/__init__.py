"""Exact modular representation theory engine: parabolically induced
modules for reduced enveloping algebras of classical Lie algebras, with
decision procedures for irreducibility."""

__version__ = "0.1.0"
