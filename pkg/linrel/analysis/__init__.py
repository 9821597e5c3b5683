from linrel.analysis.classify import (Bounds, ClassificationReport, bounds, classify, is_bounded,
                                      is_contraction, is_isometry, is_maximal_symmetric,
                                      is_positive, is_quasi_null, is_selfadjoint, is_semibounded,
                                      is_symmetric, relation_norm, resolvent_norm)
from linrel.analysis.spectrum import (SpectrumReport, full_spectrum, in_quasi_regular_set,
                                      in_regular_set, point_spectrum, spectral_core,
                                      spectral_radius)
