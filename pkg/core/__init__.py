"""
Core computation package for PotentSums
Finite fields, potent sets, sumset coverage and character sums
"""
from .fields import FieldSpec, FieldTable, build_field, field_for, parse_prime_power
from .potents import ElementSet, element_set, normalize_exponent, potent_count, potent_set
