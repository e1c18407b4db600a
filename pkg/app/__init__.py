# app/__init__.py
# Semigroup homology toolkit: tables, structure, resolutions and the bar-complex oracle.
