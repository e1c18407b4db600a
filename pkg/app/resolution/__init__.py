# app/resolution/__init__.py
# Homology from projective resolutions over the monoid ring.
