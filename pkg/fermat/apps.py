from django.apps import AppConfig


class FermatConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'fermat'
    verbose_name = 'Modular verification of x^4 + y^4 = z^p'
