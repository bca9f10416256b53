from django.apps import AppConfig


class ArraysConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'arrays'
    verbose_name = 'Orthogonal arrays'
