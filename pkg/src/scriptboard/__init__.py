"""Screenplay-to-storyboard pipeline.

Segments screenplays into functional components, simplifies complex
Description sentences into single-action sentences by rewriting their
dependency trees, maps actions and objects onto a fixed animation
knowledge base, extracts action records, and emits a timed storyboard.
"""

__version__ = "0.1.0"

SCHEMA_VERSION = 1
