from django.apps import AppConfig


class PolytopesConfig(AppConfig):
    name = 'polytopes'
    verbose_name = 'Regular polytopes'
