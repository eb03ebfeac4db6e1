"""
Django settings for the fermatcheck project.

The project has no web surface: it is a library app (``fermat``) driven by
management commands. Settings cover the framework checks, logging and the
verification knobs read by the commands.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Nothing is signed, but the framework refuses to start without a key.
SECRET_KEY = os.environ.get('SECRET_KEY', 'django-insecure-fermatcheck-local-only')

DEBUG = os.environ.get('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'fermat',
]


# No persistent data: an in-memory database keeps checks and the test runner happy.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Django REST Framework is used for serializers and the JSON renderer only
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
}


# Verification configuration

# Optional point-count cache file (newline-delimited "hash field-size count")
FERMATCHECK_POINT_CACHE = os.environ.get('FERMATCHECK_POINT_CACHE') or None

# Worker processes for the brute-force search
FERMATCHECK_WORKERS = int(os.environ.get('FERMATCHECK_WORKERS', '1'))

# Largest n for which the naive two-squares loop is run as an oracle
FERMATCHECK_NAIVE_REPRESENTATION_LIMIT = int(
    os.environ.get('FERMATCHECK_NAIVE_REPRESENTATION_LIMIT', str(10**6))
)

# Largest residue field the exhaustive point counter accepts
FERMATCHECK_MAX_FIELD_SIZE = int(os.environ.get('FERMATCHECK_MAX_FIELD_SIZE', str(10**6)))

FERMATCHECK_LOG_LEVEL = os.getenv('FERMATCHECK_LOG_LEVEL', 'DEBUG' if DEBUG else 'INFO')


# Logging configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': os.getenv('DJANGO_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
        'fermat': {
            'handlers': ['console'],
            'level': FERMATCHECK_LOG_LEVEL,
            'propagate': False,
        },
    },
}
