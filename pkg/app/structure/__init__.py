# app/structure/__init__.py
# Minimal ideal (Rees structure) and group completion.
