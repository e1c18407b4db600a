# app/nerve/__init__.py
# Bar-complex homology, used as an independent check.
