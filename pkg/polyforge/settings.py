import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent
SECRET_KEY = os.environ.get('POLYFORGE_SECRET_KEY', 'polyforge-batch-only')
DEBUG = os.environ.get('POLYFORGE_DEBUG', '') == '1'
ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'rest_framework',
    'polytopes',
]

# Polytope engine
POLYFORGE_DIM_CAP = int(os.environ.get('POLYFORGE_DIM_CAP', 8))
POLYFORGE_AUTOMORPHISM_CAP = int(os.environ.get('POLYFORGE_AUTOMORPHISM_CAP', 6))
POLYFORGE_GROUP_CAP = int(os.environ.get('POLYFORGE_GROUP_CAP', 1000))
POLYFORGE_POLYGON_BOUND = int(os.environ.get('POLYFORGE_POLYGON_BOUND', 12))
POLYFORGE_SAMPLE_SEED = int(os.environ.get('POLYFORGE_SAMPLE_SEED', 1))

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'DEFAULT_PARSER_CLASSES': [
        'rest_framework.parsers.JSONParser',
    ],
    'UNAUTHENTICATED_USER': None,
}

# Logs go to stderr; stdout carries command output only.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'polytopes': {
            'handlers': ['console'],
            'level': os.environ.get('POLYFORGE_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
