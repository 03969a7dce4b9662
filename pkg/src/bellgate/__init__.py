"""Exact gate algebra for Bell and GHZ transforms.

Scalars live in Z[w] (w = exp(i*pi/4)) with power-of-sqrt(2) denominators, so
every gate identity, conjugation table and teleportation correction in the
package is checked bit-exactly rather than numerically.
"""

__version__ = "0.1.0"
