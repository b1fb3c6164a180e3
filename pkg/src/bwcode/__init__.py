"""Toolkit for maximum bounded-weight binary codes.

A bounded-weight code is a set of binary words of common length n, all of
Hamming weight at most e, with pairwise Hamming distance at least d.  The
maximum size of such a code equals the worst-case list size when decoding
any distance-d code of length n at radius e, so the same number answers
both questions.

Subpackages:
    core      word/code primitives (distance, weight, translation, I/O)
    bounds    closed-form values, exception tables, master dispatcher
    oracle    exact branch-and-bound search (independent ground truth)
    analyzer  validation and list-decoding radius profiles
    builder   constructions and embedded optimal-code fixtures
    cli       command-line interface
"""

from bwcode.core import Code, Word

__all__ = ["Code", "Word"]
__version__ = "0.1.0"
