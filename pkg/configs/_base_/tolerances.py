######################## tolerances ##########################
tolerances = dict(
    tol_rank = 1e-10,     # singular values below tol_rank * s_max count as zero
    tol_eq = 1e-8,        # projector distance for equal subspaces
    tol_orth = 1e-10,     # Gram deviation for orthonormal / orthogonal
    tol_psd = 1e-9,       # admissible negative eigenvalue of a form matrix
    tol_cluster = 1e-7,   # eigenvalues closer than this are merged
)
