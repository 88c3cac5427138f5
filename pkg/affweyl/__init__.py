"""
affweyl: exact combinatorics of extended affine Weyl groups.

Root data with connected center, the group W_ext = W x| Y with its length
function and Bruhat order, coset representatives for finitary parabolic
subgroups, alcove geometry, restricted elements with the Steinberg
factorization, orbit-label shadows on Fl and Gr, and exhaustive lemma sweeps.
"""

__version__ = "0.1.0"
