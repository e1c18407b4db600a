# app/semigroup/__init__.py
# Multiplication tables, their text format, constructors and predicates.
