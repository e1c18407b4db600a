# app/output_formatters/__init__.py
# Plain-text and JSON renderings of processing results.
