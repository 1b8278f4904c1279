from pathlib import Path

import pytest


@pytest.fixture
def landmark_dataset_path():
    return Path(__file__).parent / "data" / "landmarks_pairs.csv"
