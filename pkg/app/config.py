import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env_flag(name: str, default: str = 'false') -> bool:
    return os.getenv(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


# Library behaviour
LIBRARY_CONFIG = {
    'debug_checks': _env_flag('BIGRASS_DEBUG_CHECKS'),
}

# Verification sweep settings
SWEEP_CONFIG = {
    'jobs': int(os.getenv('BIGRASS_JOBS', '1')),
    'lattice_samples': int(os.getenv('BIGRASS_LATTICE_SAMPLES', '100000')),
    'seed': int(os.getenv('BIGRASS_SEED', '12345')),
    'log_level': os.getenv('BIGRASS_LOG_LEVEL', 'WARNING').upper(),
}
