# Search app
