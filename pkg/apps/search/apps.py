from django.apps import AppConfig


class SearchConfig(AppConfig):
    name = 'apps.search'
    verbose_name = 'Potent Sum Searches'
