from django.apps import AppConfig


class UlrichConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'ulrich'
    verbose_name = 'Ulrich certificates'
