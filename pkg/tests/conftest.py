"""Pytest configuration and fixtures for gspcover tests."""

from fractions import Fraction

import pytest

from gspcover.core.model.instances import GspInstance, Job, UfpCoverInstance, UfpTask, class_job
from gspcover.core.model.step import StepCostFunction


@pytest.fixture
def u1():
    """The four-task UFP-cover instance U1.

    Path with 3 edges and demands (2, 3, 1); tasks
    a=[0,3] p1 c1, b=[0,2] p2 c2, c=[1,3] p2 c2, d=[1,2] p3 c4.
    The optimum is {a, b} with cost 3.

    Returns:
        UfpCoverInstance: U1
    """
    return UfpCoverInstance(3, (2, 3, 1), (
        UfpTask("a", 0, 3, 1, 1),
        UfpTask("b", 0, 2, 2, 2),
        UfpTask("c", 1, 3, 2, 2),
        UfpTask("d", 1, 2, 3, 4),
    ))


@pytest.fixture
def g1():
    """The two-job scheduling instance G1.

    Both jobs are released at 0; job 1 has p=2 and f(t)=t, job 2 has p=3
    and f(t)=2t, sampled at integer times. Running job 2 first costs 11,
    the optimum; the other order costs 12.

    Returns:
        GspInstance: G1 without class form
    """
    horizon = 12
    return GspInstance((
        Job(1, 2, 0, StepCostFunction.linear(1, horizon)),
        Job(2, 3, 0, StepCostFunction.linear(2, horizon)),
    ))


@pytest.fixture
def g1_classes():
    """G1 written in class form: one global function g(t)=t, weights 1 and 2.

    Returns:
        GspInstance: G1 with global functions and weight bound 2
    """
    g = StepCostFunction.linear(1, 12)
    return GspInstance(
        (class_job(1, 2, 0, 0, 1, [g]), class_job(2, 3, 0, 0, 2, [g])),
        (g,),
        2,
    )


@pytest.fixture
def half():
    """epsilon = 1/2, the default accuracy used throughout the suite."""
    return Fraction(1, 2)
