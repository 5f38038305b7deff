"""
Django settings for the ulrich_lab project.

The project hosts a single app, ``ulrich``, whose management commands form the
command-line toolkit. There is no web surface: no URLs, no middleware, no models.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Django refuses to start without a key; nothing here signs or encrypts data.
SECRET_KEY = config('SECRET_KEY', default='ulrich-lab-offline-toolkit')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'ulrich.apps.UlrichConfig',
]

MIDDLEWARE = []


# Database
# No models are defined; the entry only keeps Django's machinery satisfied.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# Output must not depend on the locale of the machine running the toolkit.

LANGUAGE_CODE = 'en'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# REST Framework settings
# Only serializers and the JSON renderer are used.
REST_FRAMEWORK = {
    'UNICODE_JSON': False,
    'COMPACT_JSON': False,
}


# Toolkit settings
ULRICH_SCHEMA_VERSION = 1
ULRICH_DEFAULT_PRIME = 101  # genericity trials, factorize --d > 2
ULRICH_MAX_DET_SIZE = 12  # cofactor expansion bound
ULRICH_MAX_PFAFFIAN_SIZE = 8
ULRICH_RANK_CHECK_PRIME = 2 ** 61 - 1


# Logging configuration
# Diagnostics go to stderr; stdout carries reports only.
LOG_LEVEL = config('LOG_LEVEL', default='WARNING')
LOG_FILE = config('LOG_FILE', default='')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
        'detailed': {
            'format': '{levelname} {asctime} {name} {pathname}:{lineno} {funcName} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': LOG_LEVEL,
            'class': 'logging.StreamHandler',
            'formatter': 'verbose' if DEBUG else 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
        'ulrich': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}

if LOG_FILE:
    LOGGING['handlers']['file'] = {
        'level': 'DEBUG',
        'class': 'logging.FileHandler',
        'filename': LOG_FILE,
        'formatter': 'detailed',
    }
    LOGGING['loggers']['ulrich']['handlers'].append('file')
