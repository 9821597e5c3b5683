from linrel.graphs.stargraph import (StarConfig, build_star, star_adjoint, star_beta_for_alpha,
                                     star_closure_relation, star_deficiency, star_eigvector,
                                     star_extension_alpha, star_quasi_null_params, star_sa_family,
                                     star_spectrum_closed_form)
