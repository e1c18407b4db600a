# app/core/__init__.py
# Settings, constants, errors and small helpers shared by every package.
