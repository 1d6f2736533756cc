"""
Internal library modules for jordanum.

This package contains the word grammar, exact matrix arithmetic and
integer helpers.
"""
