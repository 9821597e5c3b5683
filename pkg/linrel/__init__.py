"""Finite-dimensional linear relations: subspace algebra, classification,
spectra, the Krein transform and selfadjoint / positive extensions."""
