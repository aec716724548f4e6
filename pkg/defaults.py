"""Default values for code construction, reconstruction and simulation."""

min_width = 1
max_width = 16

radius = 1
include_center = True

trials = 10000
block_size = 4096
seed = 0
workers = 1

width = 8
p_flip = 0.02
prediction_kind = 'discrete-laplacian'
prediction_scale = 2.0
channel_kind = 'iid-bitflip'

search_max_width = 3
