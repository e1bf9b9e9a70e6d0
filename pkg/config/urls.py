"""
URL configuration for PotentSums project.
"""
from django.urls import path, include

urlpatterns = [
    path('api/', include('apps.api.urls')),
]
