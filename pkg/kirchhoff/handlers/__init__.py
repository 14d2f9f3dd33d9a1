"""
Handlers package - exports all subcommand handler modules
"""
from . import analysis
from . import circuit
from . import simplification

__all__ = [
    'analysis',
    'circuit',
    'simplification'
]
