_base_ = [
    './_base_/tolerances.py',
]
######################## run_config ##########################
seed = 1234
samples = 256          # Monte-Carlo pairs in decompose_extension
float_digits = 12      # decimals of emitted generators

log_level = 'INFO'
log_dir = None         # e.g. 'work_dirs/logs' to mirror stderr into a file

# points of the quasi-regular set for the deficiency index, as [re, im];
# None picks i, -i and m - 1
probes = None
