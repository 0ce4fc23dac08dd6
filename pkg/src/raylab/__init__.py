"""raylab: exact combinatorics of crossing-coded arcs on the plane minus a
Cantor set.

Submodules follow the pipeline: ``model`` (the marked circle), ``codes``
(reduced crossing words), ``tight`` (taut diagrams and intersection counts),
``axes`` (explicit ray families and distance certificates), ``mcg``
(mapping classes acting on codes), ``unicorn`` (the loop graph and unicorn
paths), ``quasi`` (copy counting and non-reversibility checks), ``cli``
(batch front end).
"""

from .kernels import backend_name

__all__ = ["backend_name"]
__version__ = "0.1.0"
