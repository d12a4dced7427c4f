"""schrodlab: numerical laboratory for Schrodinger maximal-function scaling laws.

Subpackages:
  fieldcore  - grids, spectral propagator, mixed norms, rescaling, fitting
  wavepacket - tile frame, decompose/reconstruct, tube geometry
  partition  - ham-sandwich cuts, polynomial cells, walls, tangency
  strichartz - cube unions, pigeonholing, decoupling and refined ratios
  extremal   - packet-spread and sparse-focusing example constructions
  experiments- named scaling experiments with CSV/manifest/SVG output
"""

__version__ = "0.1.0"
