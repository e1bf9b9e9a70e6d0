# API app
