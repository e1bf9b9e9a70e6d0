"""
Core services package
"""
from .analysis_service import AnalysisService
from .search_service import SearchService
