import json
from fractions import Fraction
import random

import pytest

from bincumulants.transforms import BinaryTable, Coords


def random_probabilities(rng, n, denominator=97):
    weights = [rng.randrange(0, denominator) for _ in range(1 << n)]
    weights[rng.randrange(1 << n)] += 1
    total = sum(weights)
    return BinaryTable(n, Coords.PROB, [Fraction(w, total) for w in weights])


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def table_file(tmp_path):
    """Write a table document and return its path"""
    def write(doc, name='table.json'):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return write
