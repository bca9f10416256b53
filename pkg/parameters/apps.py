from django.apps import AppConfig


class ParametersConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'parameters'
    verbose_name = 'SRG parameter calculus'
