from pathlib import Path
import os
from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: the key only signs nothing here, but Django insists on one.
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'srgforge-development-key')

DEBUG = os.getenv('DJANGO_DEBUG', '0') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',

    # internal apps
    'parameters',
    'graphs',
    'arrays',
    'reports',

    # external apps
    'rest_framework',
]


# djangorestframework configuration
REST_FRAMEWORK = {
    # rendering
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COERCE_DECIMAL_TO_STRING': True,
    'UNAUTHENTICATED_USER': None,
}


# srgforge configuration
SRGFORGE = {
    # 0 means one worker per CPU; parsed when the pool is sized
    'THREADS': os.getenv('SRGFORGE_THREADS', '0'),
    'SCHEMA_VERSION': 1,
    'JSON_INDENT': 2,
    'FULL_OA_SUFFIX': '.full.oa',
}


# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv('SRGFORGE_DB', str(BASE_DIR / 'db.sqlite3')),
    }
}


# Logging
# reports go to stdout, so every log record goes to stderr

LOG_LEVEL = os.getenv('SRGFORGE_LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for app in ('parameters', 'graphs', 'arrays', 'reports', 'utils')
    },
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Default primary key field type
# https://docs.djangoproject.com/en/5.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
