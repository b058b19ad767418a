"""Multifilar structure of regular-graph spectra.

Enumerate connected regular graphs, place each one in the plane of mean and
variance of ``exp(lambda_i / d)``, count its closed geodesics, and check the
Ihara-Selberg trace formula that explains the clustering.
"""

__version__ = "0.1.0"
