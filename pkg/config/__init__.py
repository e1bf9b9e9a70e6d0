# PotentSums Django Configuration
