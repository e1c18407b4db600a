# app/harness/__init__.py
# Census enumeration and the worked-example fixtures.
