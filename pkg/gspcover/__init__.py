"""gspcover - covering and scheduling approximation workbench

Exact and approximate solvers for UFP-cover and the general single machine
scheduling problem, cross-checked against brute-force oracles.
"""

__version__ = "1.0.0"
__author__ = "gspcover Development Team"
