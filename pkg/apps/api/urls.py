"""
API URL Configuration
"""
from django.urls import path
from . import views

app_name = 'api'

urlpatterns = [
    path('', views.health_check, name='health_check'),
    path('cover/', views.cover, name='cover'),
    path('charsum/', views.charsum, name='charsum'),
    path('bound/', views.bound, name='bound'),
]
