import json
import re
from pathlib import Path

import pytest

from scriptboard.config import Config
from scriptboard.deptree import load_parsed
from scriptboard.lexmap import EmbeddingTable, Lexicon

FIXTURES = Path(__file__).parent / "fixtures"
DATA = Path(__file__).parents[1] / "src" / "scriptboard" / "data"


def load_fixture_tree(name, index=0):
    return load_parsed((FIXTURES / "parses" / name).read_text())[index]


def load_fixture_trees(name):
    return load_parsed((FIXTURES / "parses" / name).read_text())


def golden_normalize(text: str) -> str:
    """Comparison normalizer for published example outputs.

    Case-folds the first character, strips one terminal period, collapses
    whitespace, and attaches the possessive clitic; everything else
    (proper-noun casing included) compares strictly. See golden/NOTES.md.
    """
    text = re.sub(r"\s+", " ", text.strip())
    if text.endswith("."):
        text = text[:-1]
    text = re.sub(r"\s+('[sS])\b", r"\1", text)
    if text and text[0].isalpha():
        text = text[0].lower() + text[1:]
    return text.strip()


@pytest.fixture(scope="session")
def lexicon():
    return Lexicon.load(DATA / "lexicon.json")


@pytest.fixture(scope="session")
def embeddings():
    return EmbeddingTable.load(DATA / "embeddings.vec")


@pytest.fixture()
def config():
    return Config()


@pytest.fixture(scope="session")
def structure_golden_rows():
    return json.loads((FIXTURES / "golden" / "structures.json").read_text())["rows"]


@pytest.fixture(scope="session")
def description_golden():
    return json.loads((FIXTURES / "golden" / "description_block.json").read_text())


@pytest.fixture(scope="session")
def script_corpus():
    return sorted((FIXTURES / "scripts").glob("*.txt"))
