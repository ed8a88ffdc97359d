"""Shared pytest configuration: a fixed default seed, overridable on the CLI."""

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        action="store",
        type=int,
        default=20240811,
        help="seed for randomized property tests",
    )


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")
