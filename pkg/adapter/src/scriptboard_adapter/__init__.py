"""Offline preprocessing tools feeding the scriptboard pipeline.

Strictly file-based: reads the core's block JSONL, writes the column
interchange format, SRL frame JSON, sentence-index manifests, and the
lexical-resource JSON. Never imported by the core at runtime.
"""

__version__ = "0.1.0"
