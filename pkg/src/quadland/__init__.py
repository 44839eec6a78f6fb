"""Quadrotor landing trainer: simulation, assessment, feedback, service, analysis."""

__version__ = "0.1.0"
