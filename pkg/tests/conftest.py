import random
from fractions import Fraction as F

import pytest

from rhoghn.cli import preset_text
from rhoghn.sheafmodel import sheaf_from_json


def load_preset(name):
    return sheaf_from_json(preset_text(name))


@pytest.fixture
def so7_paper():
    return load_preset("so7_p3_paper")


@pytest.fixture
def so7_corrected():
    return load_preset("so7_p3_corrected")


@pytest.fixture
def glxgl():
    return load_preset("glxgl_noncentral")


def rng(seed):
    return random.Random(seed)


def frac_vec(*xs):
    return tuple(F(x) for x in xs)
