# series that can be expanded from the command line
GENFUN_IDS = [
    'S', 'C', 'D', 'Ck', 'f', 'omega', 'B', 'A', 'A1', 'A2', 'H',
    'F1holo', 'F2holo', 'F3holo', 'theta', 'eta'
]

# series whose natural variable is the rescaled one (q -> q^1/2 applied)
RESCALED_IDS = ['A', 'A1', 'A2', 'H']

# objects that can be evaluated at a point of the upper half plane
EVAL_OBJECTS = [
    'Hhat', 'Ahat', 'Fhat1', 'Fhat2', 'Fhat3', 'vartheta', 'eta', 'Theta',
    'Hminus', 'Aminus'
]

CHECK_MODES = ['exact', 'numeric']
EXECUTOR_TYPES = ['concurrent_threads', 'concurrent_processes']
OUTPUT_FORMATS = ['text', 'json']
LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']
