# app/processing/__init__.py
# Result dictionaries shared by the CLI and the HTTP service.
